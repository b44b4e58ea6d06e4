#include "stimsim/dde.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "stimsim/common.hpp"

namespace stimsim {

void DdeProblem::validate() const {
    if (!rhs)
        throw std::invalid_argument("DdeProblem: rhs is empty");
    if (!(delay >= 0.0))
        throw std::invalid_argument("DdeProblem: delay must be >= 0");
}

namespace {

// Hermite segment evaluation on the partially-filled solution arrays.
double lookup(const TimeGrid& grid, const std::vector<double>& y,
              const std::vector<double>& dy, double history, double t) {
    const double u = (t - grid.t_start) / grid.h;
    if (u < -1e-9)
        return history;
    const double r = std::round(u);
    if (std::abs(u - r) <= 1e-9)
        return y[static_cast<std::size_t>(r)];
    const auto i = static_cast<std::size_t>(u);
    const double theta = u - static_cast<double>(i);
    assert(i + 1 < y.size());
    const double t2 = theta * theta, t3 = t2 * theta;
    return (2 * t3 - 3 * t2 + 1) * y[i] + (t3 - 2 * t2 + theta) * grid.h * dy[i] +
           (-2 * t3 + 3 * t2) * y[i + 1] + (t3 - t2) * grid.h * dy[i + 1];
}

} // namespace

TimeSeries integrate(const DdeProblem& problem, const TimeGrid& grid) {
    problem.validate();
    grid.validate();
    const double h = grid.h;
    const double delay = problem.delay;
    if (delay > 0.0) {
        if (delay < h - 1e-9 * h)
            throw std::invalid_argument("integrate: delay shorter than the step is unsupported");
        const double m = delay / h;
        if (std::abs(m - std::round(m)) > 1e-9)
            throw std::invalid_argument("integrate: step h must divide the delay (got delay/h = " +
                                        std::to_string(m) + ")");
    }

    const std::size_t n = grid.node_count();
    std::vector<double> y(n), dy(n);
    y[0] = problem.y0;

    // Delayed value at absolute time tq, using only completed nodes.
    auto delayed = [&](double tq) {
        return lookup(grid, y, dy, problem.history, tq);
    };
    auto eval = [&](double t, double ynow) {
        const double ydel = (delay == 0.0) ? ynow : delayed(t - delay);
        return problem.rhs(t, ynow, ydel);
    };

    dy[0] = eval(grid.t_start, y[0]);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double t = grid.node(i);
        const double yi = y[i];
        const double k1 = dy[i];
        const double k2 = eval(t + 0.5 * h, yi + 0.5 * h * k1);
        const double k3 = eval(t + 0.5 * h, yi + 0.5 * h * k2);
        const double k4 = eval(t + h, yi + h * k3);
        const double ynext = yi + h / 6.0 * (k1 + 2.0 * (k2 + k3) + k4);
        if (!std::isfinite(ynext))
            throw NumericError("integrate: non-finite state at t = " + std::to_string(t + h));
        y[i + 1] = ynext;
        dy[i + 1] = eval(t + h, ynext); // stored derivative doubles as next k1
        if (!std::isfinite(dy[i + 1]))
            throw NumericError("integrate: non-finite derivative at t = " + std::to_string(t + h));
    }

    return TimeSeries(grid, std::move(y), std::move(dy));
}

} // namespace stimsim
