#pragma once

#include "stimsim/config.hpp"

namespace stimsim {

// Exit codes shared by the library entry points and the CLI.
inline constexpr int exit_ok = 0;
inline constexpr int exit_config_error = 2;
inline constexpr int exit_numeric_error = 3;

// Each runner writes its output files under config.out_dir and returns an
// exit code, reporting errors on stderr rather than throwing.

// Per-profile time-series CSVs, a metrics summary, optional SVG charts.
int run_simulate(const RunConfig& config);

// GA calibration: per-generation history CSV and a result summary.
int run_calibrate(const RunConfig& config);

// All three canonical profiles on one grid: combined CSV + metrics table.
int run_compare(const RunConfig& config);

} // namespace stimsim
