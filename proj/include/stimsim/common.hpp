#pragma once

#include <stdexcept>

namespace stimsim {

// Bad run configuration (CLI maps this to exit code 2).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numerical failure during a run (CLI maps this to exit code 3).
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Kernel execution policy. Parallel kernels must produce bit-identical
// results to their serial reference; tests assert this.
enum class ExecMode { Serial, Parallel };

} // namespace stimsim
