#pragma once

#include <functional>

#include "stimsim/time_series.hpp"

namespace stimsim {

// Right-hand side of y'(t) = f(t, y(t), y(t - delay)). For delay == 0 the
// delayed argument receives the current stage value (plain ODE).
using DdeRhs = std::function<double(double t, double y_now, double y_delayed)>;

struct DdeProblem {
    DdeRhs rhs;
    double delay = 0.0;   // constant delay, minutes
    double history = 0.0; // y(t) for t < t_start (constant pre-history)
    double y0 = 0.0;      // y(t_start)

    void validate() const;
};

// Method-of-steps integration with the classical 4th-order Runge-Kutta step.
// Delayed lookups use cubic Hermite dense output over already-completed
// steps; times before t_start resolve to the constant history value.
//
// Requirements: a positive delay must be at least h and a whole multiple of
// h to within 1e-9 grid units, so delayed stage times never land past the
// current step. Deterministic: identical inputs give bit-identical output.
// Throws NumericError when the RHS produces a non-finite value.
TimeSeries integrate(const DdeProblem& problem, const TimeGrid& grid);

} // namespace stimsim
