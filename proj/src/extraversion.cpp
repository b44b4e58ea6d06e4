#include "stimsim/extraversion.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <memory>
#include <stdexcept>
#include <utility>

#include "stimsim/dde.hpp"

namespace stimsim {

PersonalityProfile PersonalityProfile::by_label(const std::string& label) {
    if (label == "extrovert") return extrovert();
    if (label == "ambivert") return ambivert();
    if (label == "introvert") return introvert();
    throw std::invalid_argument("unknown personality label '" + label + "'");
}

PersonalityProfile PersonalityProfile::custom(std::string label, double b) {
    PersonalityProfile prof{std::move(label), b, b};
    prof.validate();
    return prof;
}

PersonalityProfile PersonalityProfile::with_y0_override(std::string label, double b, double y0) {
    PersonalityProfile prof{std::move(label), b, y0};
    prof.validate();
    return prof;
}

void PersonalityProfile::validate() const {
    if (!(b > 0.0))
        throw std::invalid_argument("PersonalityProfile: b must be > 0 (it divides p)");
    if (label.empty())
        throw std::invalid_argument("PersonalityProfile: empty label");
}

void DynamicsParams::validate() const {
    if (!(a > 0.0)) throw std::invalid_argument("DynamicsParams: a must be > 0");
    if (!(p >= 0.0)) throw std::invalid_argument("DynamicsParams: p must be >= 0");
    if (!(q >= 0.0)) throw std::invalid_argument("DynamicsParams: q must be >= 0");
    if (!(tau >= 0.0)) throw std::invalid_argument("DynamicsParams: tau must be >= 0");
    if (!(t0 >= 0.0)) throw std::invalid_argument("DynamicsParams: t0 must be >= 0");
}

double extraversion_rhs(double t, double y_now, double y_delayed,
                        const StimulantParams& stim, const DynamicsParams& dyn,
                        const PersonalityProfile& prof) {
    const double b = prof.b;
    double dydt = dyn.a * (b - y_now) + (dyn.p / b) * shifted_drug_level(t, dyn.t0, stim);
    if (t > dyn.t0 + dyn.tau)
        dydt -= b * dyn.q * shifted_drug_level(t - dyn.tau, dyn.t0, stim) * y_delayed;
    return dydt;
}

namespace detail {

namespace {

// Shared per-node arithmetic of the effect fill.
struct EffectPoint {
    double s, e, i, bal;
};

inline EffectPoint effect_at(double t, const TimeSeries& y, const StimulantParams& stim,
                             const DynamicsParams& dyn, const PersonalityProfile& prof) {
    EffectPoint pt{};
    pt.s = shifted_drug_level(t, dyn.t0, stim);
    pt.e = (dyn.p / prof.b) * pt.s;
    const double onset = dyn.t0 + dyn.tau;
    pt.i = 0.0;
    if (t >= onset) {
        const double s_del = shifted_drug_level(t - dyn.tau, dyn.t0, stim);
        pt.i = prof.b * dyn.q * s_del * y.dense_eval(t - dyn.tau - dyn.t0);
    }
    pt.bal = pt.e - pt.i;
    return pt;
}

} // namespace

EffectArrays fill_effects_serial(const TimeSeries& y, const StimulantParams& stim,
                                 const DynamicsParams& dyn, const PersonalityProfile& prof) {
    const std::size_t n = y.size();
    EffectArrays out;
    out.s.resize(n);
    out.excitation.resize(n);
    out.inhibition.resize(n);
    out.balance.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const EffectPoint pt = effect_at(y.time(i), y, stim, dyn, prof);
        out.s[i] = pt.s;
        out.excitation[i] = pt.e;
        out.inhibition[i] = pt.i;
        out.balance[i] = pt.bal;
    }
    return out;
}

EffectArrays fill_effects_parallel(const TimeSeries& y, const StimulantParams& stim,
                                   const DynamicsParams& dyn, const PersonalityProfile& prof) {
    const std::int64_t n = static_cast<std::int64_t>(y.size());
    EffectArrays out;
    out.s.resize(y.size());
    out.excitation.resize(y.size());
    out.inhibition.resize(y.size());
    out.balance.resize(y.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        const EffectPoint pt = effect_at(y.time(k), y, stim, dyn, prof);
        out.s[k] = pt.s;
        out.excitation[k] = pt.e;
        out.inhibition[k] = pt.i;
        out.balance[k] = pt.bal;
    }
    return out;
}

} // namespace detail

SimulationResult simulate(const PersonalityProfile& prof, const StimulantParams& stim,
                          const DynamicsParams& dyn, const TimeGrid& grid, ExecMode mode) {
    prof.validate();
    stim.validate();
    dyn.validate();
    grid.validate();
    if (grid.t_start != 0.0)
        throw std::invalid_argument("simulate: grid must start at t = 0");
    if (!grid.aligned(dyn.t0))
        throw std::invalid_argument("simulate: intake time t0 must fall on a grid node");
    const double onset = dyn.t0 + dyn.tau;
    if (onset <= grid.t_end + 1e-9 && !grid.aligned(onset))
        throw std::invalid_argument("simulate: inhibition onset t0+tau must fall on a grid node");

    DdeProblem problem;
    problem.delay = dyn.tau + dyn.t0; // the delayed argument is t - tau - t0
    problem.history = prof.b;         // constant pre-intake history
    problem.y0 = prof.y0;
    problem.rhs = [&stim, &dyn, &prof](double t, double y_now, double y_delayed) {
        return extraversion_rhs(t, y_now, y_delayed, stim, dyn, prof);
    };

    TimeSeries y = integrate(problem, grid);
    detail::EffectArrays eff = (mode == ExecMode::Parallel)
                                   ? detail::fill_effects_parallel(y, stim, dyn, prof)
                                   : detail::fill_effects_serial(y, stim, dyn, prof);

    return SimulationResult{prof,
                            stim,
                            dyn,
                            std::move(y),
                            TimeSeries::sampled(grid, std::move(eff.s)),
                            TimeSeries::sampled(grid, std::move(eff.excitation)),
                            TimeSeries::sampled(grid, std::move(eff.inhibition)),
                            TimeSeries::sampled(grid, std::move(eff.balance))};
}

std::vector<SimulationResult> simulate_profiles(std::span<const PersonalityProfile> profs,
                                                const StimulantParams& stim,
                                                const DynamicsParams& dyn,
                                                const TimeGrid& grid, ExecMode mode) {
    const std::int64_t n = static_cast<std::int64_t>(profs.size());
    std::vector<SimulationResult> results;
    results.reserve(profs.size());
    if (mode == ExecMode::Serial || n <= 1) {
        for (const auto& prof : profs)
            results.push_back(simulate(prof, stim, dyn, grid, mode));
        return results;
    }

    // Exceptions must not escape the parallel region; capture and rethrow.
    std::vector<std::unique_ptr<SimulationResult>> slots(profs.size());
    std::exception_ptr error;
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        try {
            const auto k = static_cast<std::size_t>(i);
            slots[k] = std::make_unique<SimulationResult>(
                simulate(profs[k], stim, dyn, grid, ExecMode::Serial));
        } catch (...) {
#pragma omp critical
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    for (auto& slot : slots) results.push_back(std::move(*slot));
    return results;
}

SummaryMetrics summary_metrics(const SimulationResult& result) {
    const TimeSeries& y = result.y;
    if (y.size() == 0)
        throw std::invalid_argument("summary_metrics: empty series");
    const double b = result.profile.b;

    std::size_t peak_idx = 0;
    for (std::size_t i = 1; i < y.size(); ++i)
        if (y.value(i) > y.value(peak_idx)) peak_idx = i;

    SummaryMetrics m;
    m.peak_y = y.value(peak_idx);
    m.peak_y_time = y.time(peak_idx);
    m.peak_excursion = m.peak_y - b;

    m.undershoot_min = 0.0;
    for (std::size_t i = peak_idx + 1; i < y.size(); ++i)
        m.undershoot_min = std::min(m.undershoot_min, y.value(i) - b);

    // Earliest sample index at or after the peak from which y stays inside
    // the +-5% band through the end of the horizon; t_end when it never does.
    const double band = 0.05 * b;
    std::size_t k = y.size(); // sentinel: never
    for (std::size_t i = y.size(); i-- > peak_idx;) {
        if (std::abs(y.value(i) - b) <= band)
            k = i;
        else
            break;
    }
    m.return_time = (k < y.size()) ? y.time(k) : y.grid().node(y.size() - 1);

    m.y_min = *std::min_element(y.values().begin(), y.values().end());
    m.went_negative = m.y_min < 0.0;
    return m;
}

} // namespace stimsim
