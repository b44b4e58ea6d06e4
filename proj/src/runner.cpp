#include "stimsim/runner.hpp"

#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <span>
#include <vector>

#include "stimsim/common.hpp"
#include "stimsim/csv.hpp"
#include "stimsim/svg.hpp"

namespace stimsim {

namespace {

namespace fs = std::filesystem;

std::vector<PersonalityProfile> selected_profiles(const RunConfig& config) {
    std::vector<PersonalityProfile> profs;
    profs.reserve(config.profiles.size());
    for (const auto& label : config.profiles)
        profs.push_back(PersonalityProfile::by_label(label));
    return profs;
}

std::string out_path(const RunConfig& config, const std::string& name) {
    return (fs::path(config.out_dir) / name).string();
}

void ensure_out_dir(const RunConfig& config) {
    std::error_code ec;
    fs::create_directories(config.out_dir, ec);
    if (ec)
        throw ConfigError("cannot create output directory '" + config.out_dir +
                          "': " + ec.message());
}

void write_timeseries_csv(const RunConfig& config, const SimulationResult& r) {
    CsvWriter csv({"t_min", "s", "excitation", "inhibition", "balance",
                   "balance_about_tonic", "y"});
    const double b = r.profile.b;
    for (std::size_t i = 0; i < r.y.size(); ++i) {
        const double bal = r.balance.value(i);
        csv.add_numeric_row({r.y.time(i), r.s.value(i), r.excitation.value(i),
                             r.inhibition.value(i), bal, b + bal, r.y.value(i)});
    }
    const std::string path = out_path(config, "timeseries_" + r.profile.label + ".csv");
    csv.write(path);
    std::cout << "wrote " << path << "\n";
}

void write_metrics_csv(const RunConfig& config, std::span<const SimulationResult> results,
                       const std::string& filename, bool full) {
    CsvWriter csv(full ? std::vector<std::string>{"profile", "b", "peak_y", "peak_y_time",
                                                  "peak_excursion", "undershoot_min",
                                                  "return_time", "y_min", "went_negative"}
                       : std::vector<std::string>{"profile", "peak_excursion", "peak_y_time",
                                                  "return_time"});
    for (const auto& r : results) {
        const SummaryMetrics m = summary_metrics(r);
        if (full)
            csv.add_row({r.profile.label, format_value(r.profile.b), format_value(m.peak_y),
                         format_value(m.peak_y_time), format_value(m.peak_excursion),
                         format_value(m.undershoot_min), format_value(m.return_time),
                         format_value(m.y_min), m.went_negative ? "true" : "false"});
        else
            csv.add_row({r.profile.label, format_value(m.peak_excursion),
                         format_value(m.peak_y_time), format_value(m.return_time)});
    }
    const std::string path = out_path(config, filename);
    csv.write(path);
    std::cout << "wrote " << path << "\n";
}

void write_charts(const RunConfig& config, std::span<const SimulationResult> results) {
    std::vector<double> t(results.front().y.size());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = results.front().y.time(i);

    SvgChart fig1("Stimulant level in the body", "t [min]", "s");
    fig1.add_series("s", t, results.front().s.values());
    fig1.write(out_path(config, "figure1.svg"));

    SvgChart fig2("Excitation and inhibitor effects", "t [min]", "effect");
    SvgChart fig3("Excitation-inhibitor balance", "t [min]", "balance");
    SvgChart fig4("Extraversion", "t [min]", "y");
    for (const auto& r : results) {
        std::vector<double> neg_inh(r.inhibition.values());
        for (auto& v : neg_inh) v = -v;
        fig2.add_series("excitation " + r.profile.label, t, r.excitation.values());
        fig2.add_series("-inhibition " + r.profile.label, t, neg_inh);
        fig3.add_series(r.profile.label, t, r.balance.values());
        fig4.add_series(r.profile.label, t, r.y.values());
    }
    fig2.write(out_path(config, "figure2.svg"));
    fig3.write(out_path(config, "figure3.svg"));
    fig4.write(out_path(config, "figure4.svg"));
    std::cout << "wrote " << out_path(config, "figure1.svg") << " .. figure4.svg\n";
}

int guarded(const std::function<int()>& body) {
    try {
        return body();
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return exit_config_error;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return exit_config_error;
    } catch (const NumericError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return exit_numeric_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_numeric_error;
    }
}

} // namespace

int run_simulate(const RunConfig& config) {
    return guarded([&] {
        validate_config(config);
        ensure_out_dir(config);
        const auto profs = selected_profiles(config);
        const auto results = simulate_profiles(profs, config.stim, config.dyn, config.grid);
        for (const auto& r : results)
            write_timeseries_csv(config, r);
        write_metrics_csv(config, results, "metrics.csv", /*full=*/true);
        if (config.charts)
            write_charts(config, results);
        return exit_ok;
    });
}

int run_compare(const RunConfig& config) {
    return guarded([&] {
        validate_config(config);
        ensure_out_dir(config);
        const std::vector<PersonalityProfile> profs = {PersonalityProfile::extrovert(),
                                                       PersonalityProfile::ambivert(),
                                                       PersonalityProfile::introvert()};
        const auto results = simulate_profiles(profs, config.stim, config.dyn, config.grid);

        std::vector<std::string> header = {"t_min", "s"};
        for (const auto& r : results)
            for (const char* col : {"excitation_", "inhibition_", "balance_", "y_"})
                header.push_back(col + r.profile.label);
        CsvWriter csv(std::move(header));
        for (std::size_t i = 0; i < results.front().y.size(); ++i) {
            std::vector<double> row = {results.front().y.time(i), results.front().s.value(i)};
            for (const auto& r : results) {
                row.push_back(r.excitation.value(i));
                row.push_back(r.inhibition.value(i));
                row.push_back(r.balance.value(i));
                row.push_back(r.y.value(i));
            }
            csv.add_numeric_row(row);
        }
        const std::string path = out_path(config, "compare_timeseries.csv");
        csv.write(path);
        std::cout << "wrote " << path << "\n";
        write_metrics_csv(config, results, "compare_metrics.csv", /*full=*/false);
        if (config.charts)
            write_charts(config, results);
        return exit_ok;
    });
}

int run_calibrate(const RunConfig& config) {
    return guarded([&] {
        validate_config(config);
        ensure_out_dir(config);
        const CalibrationResult res = calibrate(config.ga, config.fitness);

        CsvWriter csv({"generation", "best_fitness", "mean_fitness", "best_alpha", "best_beta"});
        for (std::size_t g = 0; g < res.history.size(); ++g) {
            const auto& s = res.history[g];
            csv.add_row({std::to_string(g), format_value(s.best_fitness),
                         format_value(s.mean_fitness), format_value(s.best_alpha),
                         format_value(s.best_beta)});
        }
        const std::string hist_path = out_path(config, "calibration_history.csv");
        csv.write(hist_path);

        std::string summary;
        summary += "fitness_mode = " + to_string(config.fitness.mode) + "\n";
        summary += "best_alpha = " + format_value(res.best_alpha) + "\n";
        summary += "best_beta = " + format_value(res.best_beta) + "\n";
        summary += "best_fitness = " + format_value(res.best_fitness) + "\n";
        summary += "generations_run = " + std::to_string(res.generations_run) + "\n";
        summary += "terminated_by = " + to_string(res.terminated_by) + "\n";
        if (std::abs(res.best_alpha - res.best_beta) >= rate_gap_tol && res.best_fitness > 0.0) {
            const StimulantParams best{config.fitness.dose, res.best_alpha, res.best_beta};
            summary += "peak_time = " + format_value(peak_time(best)) + "\n";
            summary += "s_at_eval_time = " +
                       format_value(drug_level(config.fitness.eval_time, best)) + "\n";
        }
        const std::string sum_path = out_path(config, "calibration_summary.txt");
        write_file(sum_path, summary);

        std::cout << "wrote " << hist_path << "\n"
                  << "wrote " << sum_path << "\n"
                  << summary;
        return exit_ok;
    });
}

} // namespace stimsim
