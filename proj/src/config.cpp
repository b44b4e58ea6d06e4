#include "stimsim/config.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <system_error>

#include "stimsim/common.hpp"

namespace stimsim {

namespace {

std::string trim(std::string_view sv) {
    const auto first = sv.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = sv.find_last_not_of(" \t\r");
    return std::string(sv.substr(first, last - first + 1));
}

double parse_double(const std::string& value, const std::string& key, int line) {
    double out{};
    const char* begin = value.data();
    const char* end = begin + value.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    if (ec != std::errc{} || ptr != end)
        throw ConfigError("line " + std::to_string(line) + ": field '" + key +
                          "': not a number: '" + value + "'");
    return out;
}

std::uint64_t parse_uint(const std::string& value, const std::string& key, int line) {
    std::uint64_t out{};
    const char* begin = value.data();
    const char* end = begin + value.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    if (ec != std::errc{} || ptr != end)
        throw ConfigError("line " + std::to_string(line) + ": field '" + key +
                          "': not a nonnegative integer: '" + value + "'");
    return out;
}

bool parse_bool(const std::string& value, const std::string& key, int line) {
    if (value == "true") return true;
    if (value == "false") return false;
    throw ConfigError("line " + std::to_string(line) + ": field '" + key +
                      "': expected true or false, got '" + value + "'");
}

std::vector<std::string> parse_list(const std::string& value) {
    std::vector<std::string> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

// Shortest decimal that round-trips the exact double.
std::string fmt(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

std::string fmt(std::uint64_t v) { return std::to_string(v); }

} // namespace

RunConfig parse_config_text(std::string_view text, const std::string& source_name) {
    RunConfig cfg;
    using Setter = std::function<void(const std::string&, int)>;
    const std::map<std::string, Setter> setters = {
        {"dose", [&](const std::string& v, int l) { cfg.stim.dose = parse_double(v, "dose", l); }},
        {"alpha", [&](const std::string& v, int l) { cfg.stim.alpha = parse_double(v, "alpha", l); }},
        {"beta", [&](const std::string& v, int l) { cfg.stim.beta = parse_double(v, "beta", l); }},
        {"a", [&](const std::string& v, int l) { cfg.dyn.a = parse_double(v, "a", l); }},
        {"p", [&](const std::string& v, int l) { cfg.dyn.p = parse_double(v, "p", l); }},
        {"q", [&](const std::string& v, int l) { cfg.dyn.q = parse_double(v, "q", l); }},
        {"tau", [&](const std::string& v, int l) { cfg.dyn.tau = parse_double(v, "tau", l); }},
        {"t0", [&](const std::string& v, int l) { cfg.dyn.t0 = parse_double(v, "t0", l); }},
        {"t_end", [&](const std::string& v, int l) { cfg.grid.t_end = parse_double(v, "t_end", l); }},
        {"h", [&](const std::string& v, int l) { cfg.grid.h = parse_double(v, "h", l); }},
        {"profiles", [&](const std::string& v, int) { cfg.profiles = parse_list(v); }},
        {"out_dir", [&](const std::string& v, int) { cfg.out_dir = v; }},
        {"charts", [&](const std::string& v, int l) { cfg.charts = parse_bool(v, "charts", l); }},
        {"pop_size",
         [&](const std::string& v, int l) { cfg.ga.pop_size = parse_uint(v, "pop_size", l); }},
        {"crossover_rate",
         [&](const std::string& v, int l) {
             cfg.ga.crossover_rate = parse_double(v, "crossover_rate", l);
         }},
        {"mutation_rate",
         [&](const std::string& v, int l) {
             cfg.ga.mutation_rate = parse_double(v, "mutation_rate", l);
         }},
        {"mutation_range",
         [&](const std::string& v, int l) {
             cfg.ga.mutation_range = parse_double(v, "mutation_range", l);
         }},
        {"max_generations",
         [&](const std::string& v, int l) {
             cfg.ga.max_generations = parse_uint(v, "max_generations", l);
         }},
        {"stagnation_window",
         [&](const std::string& v, int l) {
             cfg.ga.stagnation_window = parse_uint(v, "stagnation_window", l);
         }},
        {"elite_count",
         [&](const std::string& v, int l) { cfg.ga.elite_count = parse_uint(v, "elite_count", l); }},
        {"rng_seed",
         [&](const std::string& v, int l) { cfg.ga.rng_seed = parse_uint(v, "rng_seed", l); }},
        {"fitness_mode",
         [&](const std::string& v, int l) {
             try {
                 cfg.fitness.mode = fitness_mode_from_string(v);
             } catch (const std::invalid_argument& e) {
                 throw ConfigError("line " + std::to_string(l) + ": " + e.what());
             }
         }},
        {"eval_time",
         [&](const std::string& v, int l) { cfg.fitness.eval_time = parse_double(v, "eval_time", l); }},
        {"fitness_dose",
         [&](const std::string& v, int l) { cfg.fitness.dose = parse_double(v, "fitness_dose", l); }},
        {"target_peak_time",
         [&](const std::string& v, int l) {
             cfg.fitness.target_peak_time = parse_double(v, "target_peak_time", l);
         }},
        {"peak_penalty_weight",
         [&](const std::string& v, int l) {
             cfg.fitness.peak_penalty_weight = parse_double(v, "peak_penalty_weight", l);
         }},
    };

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view raw = (nl == std::string_view::npos) ? text.substr(pos)
                                                              : text.substr(pos, nl - pos);
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
        ++line_no;

        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(source_name + ": line " + std::to_string(line_no) +
                              ": expected 'key = value', got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const auto it = setters.find(key);
        if (it == setters.end())
            throw ConfigError(source_name + ": line " + std::to_string(line_no) +
                              ": unknown key '" + key + "'");
        try {
            it->second(value, line_no);
        } catch (const ConfigError& e) {
            throw ConfigError(source_name + ": " + e.what());
        }
    }

    validate_config(cfg);
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), path);
}

void validate_config(const RunConfig& config) {
    auto wrap = [](const char* field, const std::function<void()>& fn) {
        try {
            fn();
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("config field group '") + field + "': " + e.what());
        }
    };
    wrap("stimulant", [&] { config.stim.validate(); });
    wrap("dynamics", [&] { config.dyn.validate(); });
    wrap("grid", [&] { config.grid.validate(); });
    wrap("ga", [&] { config.ga.validate(); });
    wrap("fitness", [&] { config.fitness.validate(); });

    if (config.grid.t_start != 0.0)
        throw ConfigError("grid must start at t = 0");
    if (config.profiles.empty())
        throw ConfigError("field 'profiles': at least one profile required");
    for (const auto& label : config.profiles) {
        try {
            PersonalityProfile::by_label(label);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("field 'profiles': ") + e.what());
        }
    }
    if (!config.grid.aligned(config.dyn.t0))
        throw ConfigError("field 'h': step must divide the intake time t0 = " +
                          std::to_string(config.dyn.t0));
    const double onset = config.dyn.t0 + config.dyn.tau;
    if (onset <= config.grid.t_end + 1e-9 && !config.grid.aligned(onset))
        throw ConfigError("field 'h': step must divide the inhibition onset t0+tau = " +
                          std::to_string(onset));
}

std::string dump_config(const RunConfig& c) {
    std::string out;
    out += "# single-dose stimulant response toolkit configuration\n";
    out += "\n# pharmacokinetics\n";
    out += "dose = " + fmt(c.stim.dose) + "\n";
    out += "alpha = " + fmt(c.stim.alpha) + "\n";
    out += "beta = " + fmt(c.stim.beta) + "\n";
    out += "\n# extraversion dynamics\n";
    out += "a = " + fmt(c.dyn.a) + "\n";
    out += "p = " + fmt(c.dyn.p) + "\n";
    out += "q = " + fmt(c.dyn.q) + "\n";
    out += "tau = " + fmt(c.dyn.tau) + "\n";
    out += "t0 = " + fmt(c.dyn.t0) + "\n";
    out += "\n# time grid (starts at 0)\n";
    out += "t_end = " + fmt(c.grid.t_end) + "\n";
    out += "h = " + fmt(c.grid.h) + "\n";
    out += "\n# personalities to simulate\n";
    out += "profiles = ";
    for (std::size_t i = 0; i < c.profiles.size(); ++i)
        out += (i ? "," : "") + c.profiles[i];
    out += "\n";
    out += "\n# genetic algorithm\n";
    out += "pop_size = " + fmt(std::uint64_t{c.ga.pop_size}) + "\n";
    out += "crossover_rate = " + fmt(c.ga.crossover_rate) + "\n";
    out += "mutation_rate = " + fmt(c.ga.mutation_rate) + "\n";
    out += "mutation_range = " + fmt(c.ga.mutation_range) + "\n";
    out += "max_generations = " + fmt(std::uint64_t{c.ga.max_generations}) + "\n";
    out += "stagnation_window = " + fmt(std::uint64_t{c.ga.stagnation_window}) + "\n";
    out += "elite_count = " + fmt(std::uint64_t{c.ga.elite_count}) + "\n";
    out += "rng_seed = " + fmt(std::uint64_t{c.ga.rng_seed}) + "\n";
    out += "\n# calibration fitness\n";
    out += "fitness_mode = " + to_string(c.fitness.mode) + "\n";
    out += "eval_time = " + fmt(c.fitness.eval_time) + "\n";
    out += "fitness_dose = " + fmt(c.fitness.dose) + "\n";
    out += "target_peak_time = " + fmt(c.fitness.target_peak_time) + "\n";
    out += "peak_penalty_weight = " + fmt(c.fitness.peak_penalty_weight) + "\n";
    out += "\n# output\n";
    out += "out_dir = " + c.out_dir + "\n";
    out += "charts = " + std::string(c.charts ? "true" : "false") + "\n";
    return out;
}

std::string dump_defaults() { return dump_config(RunConfig{}); }

} // namespace stimsim
