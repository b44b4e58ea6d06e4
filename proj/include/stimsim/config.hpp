#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "stimsim/extraversion.hpp"
#include "stimsim/ga.hpp"
#include "stimsim/pk_model.hpp"
#include "stimsim/time_series.hpp"

namespace stimsim {

// Aggregated run settings. File format: flat `key = value` lines, `#`
// comments, unknown keys rejected. Every field defaults to the reference
// parameter set.
struct RunConfig {
    StimulantParams stim;
    DynamicsParams dyn;
    TimeGrid grid;                       // t_start is always 0
    std::vector<std::string> profiles = {"extrovert", "ambivert", "introvert"};
    GaConfig ga;
    FitnessSpec fitness;
    std::string out_dir = "out";
    bool charts = false;
};

// Throws ConfigError with a line/field diagnostic.
RunConfig parse_config_text(std::string_view text, const std::string& source_name);
RunConfig parse_config_file(const std::string& path);

// Serialization that parses back to an identical RunConfig.
std::string dump_config(const RunConfig& config);
std::string dump_defaults();

// Cross-field checks (grid alignment of t0 and t0+tau, profile labels, ...).
// Throws ConfigError naming the offending field.
void validate_config(const RunConfig& config);

} // namespace stimsim
