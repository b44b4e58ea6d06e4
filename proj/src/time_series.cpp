#include "stimsim/time_series.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace stimsim {

void TimeGrid::validate() const {
    if (!(h > 0.0))
        throw std::invalid_argument("TimeGrid: h must be > 0");
    if (!(t_end > t_start))
        throw std::invalid_argument("TimeGrid: t_end must exceed t_start");
    if (node_count() < 2)
        throw std::invalid_argument("TimeGrid: grid needs at least two nodes");
}

std::size_t TimeGrid::node_count() const {
    return static_cast<std::size_t>(std::floor((t_end - t_start) / h + 1e-9)) + 1;
}

bool TimeGrid::aligned(double t, double tol) const {
    const double u = (t - t_start) / h;
    return std::abs(u - std::round(u)) <= tol;
}

TimeSeries::TimeSeries(const TimeGrid& grid, std::vector<double> values,
                       std::vector<double> derivatives)
    : grid_(grid), values_(std::move(values)), derivs_(std::move(derivatives)) {
    grid_.validate();
    if (values_.size() != grid_.node_count())
        throw std::invalid_argument("TimeSeries: sample count " + std::to_string(values_.size()) +
                                    " does not match grid node count " +
                                    std::to_string(grid_.node_count()));
    if (!derivs_.empty() && derivs_.size() != values_.size())
        throw std::invalid_argument("TimeSeries: derivative count does not match sample count");
}

TimeSeries TimeSeries::sampled(const TimeGrid& grid, std::vector<double> values) {
    return TimeSeries(grid, std::move(values), {});
}

double TimeSeries::dense_eval(double t) const {
    const double u = (t - grid_.t_start) / grid_.h;
    const double last = static_cast<double>(values_.size() - 1);
    if (u < -1e-9 || u > last + 1e-9)
        throw std::domain_error("dense_eval: t = " + std::to_string(t) +
                                " outside series range");

    // Grid nodes return the stored sample exactly.
    const double r = std::round(u);
    if (std::abs(u - r) <= 1e-9) {
        const auto i = static_cast<std::size_t>(r);
        return values_[i];
    }

    if (derivs_.empty())
        throw std::logic_error("dense_eval: series has no derivative samples for "
                               "between-node interpolation");

    const auto i = static_cast<std::size_t>(u); // floor; u > 0 here
    const double theta = u - static_cast<double>(i);
    const double h = grid_.h;
    const double y0 = values_[i], y1 = values_[i + 1];
    const double m0 = derivs_[i], m1 = derivs_[i + 1];
    const double t2 = theta * theta;
    const double t3 = t2 * theta;
    // Cubic Hermite basis
    const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
    const double h10 = t3 - 2.0 * t2 + theta;
    const double h01 = -2.0 * t3 + 3.0 * t2;
    const double h11 = t3 - t2;
    return h00 * y0 + h10 * h * m0 + h01 * y1 + h11 * h * m1;
}

} // namespace stimsim
