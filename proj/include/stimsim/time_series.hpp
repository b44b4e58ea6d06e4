#pragma once

#include <cstddef>
#include <vector>

namespace stimsim {

// Uniform grid t_i = t_start + i*h. The last node is the largest t_i not
// exceeding t_end (plus a 1e-9 grid-unit snap for spans that are whole
// multiples of h up to rounding).
struct TimeGrid {
    double t_start = 0.0;
    double t_end = 725.0;
    double h = 0.01;

    std::size_t node_count() const;
    double node(std::size_t i) const { return t_start + static_cast<double>(i) * h; }
    // True when t coincides with a grid node to within tol grid units.
    bool aligned(double t, double tol = 1e-9) const;

    // Throws std::invalid_argument on violated invariants.
    void validate() const;
};

// Sampled solution on a TimeGrid. When derivative samples are present
// (integration output), dense_eval interpolates between nodes with a cubic
// Hermite; series built from values alone support node-exact queries only.
class TimeSeries {
public:
    TimeSeries(const TimeGrid& grid, std::vector<double> values,
               std::vector<double> derivatives);

    // Value-only series (no dense output between nodes).
    static TimeSeries sampled(const TimeGrid& grid, std::vector<double> values);

    const TimeGrid& grid() const { return grid_; }
    std::size_t size() const { return values_.size(); }
    double time(std::size_t i) const { return grid_.node(i); }
    double value(std::size_t i) const { return values_[i]; }
    const std::vector<double>& values() const { return values_; }
    const std::vector<double>& derivatives() const { return derivs_; }
    bool has_derivatives() const { return !derivs_.empty(); }
    double front() const { return values_.front(); }
    double back() const { return values_.back(); }

    // Exact at grid nodes; cubic Hermite between them (requires
    // derivatives). Throws std::domain_error outside [t_start, last node].
    double dense_eval(double t) const;

private:
    TimeGrid grid_;
    std::vector<double> values_;
    std::vector<double> derivs_;
};

} // namespace stimsim
