#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "stimsim/config.hpp"
#include "stimsim/runner.hpp"

namespace {

struct CommonOpts {
    std::string config_path;
    std::string out_dir;
    bool charts = false;
};

stimsim::RunConfig load(const CommonOpts& opts) {
    stimsim::RunConfig cfg = stimsim::parse_config_file(opts.config_path);
    if (!opts.out_dir.empty()) cfg.out_dir = opts.out_dir;
    if (opts.charts) cfg.charts = true;
    return cfg;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Single-dose stimulant response simulator and GA rate calibrator"};
    app.require_subcommand(0, 1);

    bool dump_defaults = false;
    app.add_flag("--dump-defaults", dump_defaults,
                 "Print the default configuration file and exit");

    CommonOpts sim_opts, cmp_opts, cal_opts;
    std::string seed_override, mode_override;

    auto* sim = app.add_subcommand("simulate", "Simulate the selected personality profiles");
    sim->add_option("--config", sim_opts.config_path, "Configuration file")->required();
    sim->add_option("--out", sim_opts.out_dir, "Output directory (overrides config)");
    sim->add_flag("--charts", sim_opts.charts, "Also write SVG charts");

    auto* cal = app.add_subcommand("calibrate", "Calibrate alpha/beta with the genetic algorithm");
    cal->add_option("--config", cal_opts.config_path, "Configuration file")->required();
    cal->add_option("--out", cal_opts.out_dir, "Output directory (overrides config)");
    cal->add_option("--seed", seed_override, "RNG seed (overrides config)");
    cal->add_option("--mode", mode_override,
                    "Fitness mode: paper_literal or peak_constrained (overrides config)");

    auto* cmp = app.add_subcommand("compare", "Run all three canonical profiles on one grid");
    cmp->add_option("--config", cmp_opts.config_path, "Configuration file")->required();
    cmp->add_option("--out", cmp_opts.out_dir, "Output directory (overrides config)");
    cmp->add_flag("--charts", cmp_opts.charts, "Also write SVG charts");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : stimsim::exit_config_error;
    }

    if (dump_defaults) {
        std::cout << stimsim::dump_defaults();
        return stimsim::exit_ok;
    }

    try {
        if (sim->parsed())
            return stimsim::run_simulate(load(sim_opts));
        if (cal->parsed()) {
            stimsim::RunConfig cfg = load(cal_opts);
            if (!seed_override.empty())
                cfg.ga.rng_seed = std::stoull(seed_override);
            if (!mode_override.empty())
                cfg.fitness.mode = stimsim::fitness_mode_from_string(mode_override);
            return stimsim::run_calibrate(cfg);
        }
        if (cmp->parsed())
            return stimsim::run_compare(load(cmp_opts));
    } catch (const stimsim::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return stimsim::exit_config_error;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return stimsim::exit_config_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return stimsim::exit_numeric_error;
    }

    std::cout << app.help();
    return stimsim::exit_config_error;
}
