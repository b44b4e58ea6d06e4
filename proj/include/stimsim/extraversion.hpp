#pragma once

#include <span>
#include <string>
#include <vector>

#include "stimsim/common.hpp"
#include "stimsim/pk_model.hpp"
#include "stimsim/time_series.hpp"

namespace stimsim {

// An individual's tonic activation level b and starting extraversion y0.
// y0 equals b unless explicitly overridden (expert use).
struct PersonalityProfile {
    std::string label;
    double b = 1.0;
    double y0 = 1.0;

    static PersonalityProfile extrovert() { return {"extrovert", 0.5, 0.5}; }
    static PersonalityProfile ambivert() { return {"ambivert", 1.0, 1.0}; }
    static PersonalityProfile introvert() { return {"introvert", 1.5, 1.5}; }
    // Canonical profile by label; throws std::invalid_argument otherwise.
    static PersonalityProfile by_label(const std::string& label);
    static PersonalityProfile custom(std::string label, double b);
    static PersonalityProfile with_y0_override(std::string label, double b, double y0);

    void validate() const;
};

struct DynamicsParams {
    double a = 0.025;   // homeostatic control rate, 1/minute
    double p = 0.8;     // excitation effect power
    double q = 0.15;    // inhibition effect power
    double tau = 340.0; // inhibitor effect delay, minutes
    double t0 = 5.0;    // intake time, minutes

    void validate() const;
};

// Piecewise right-hand side of the extraversion dynamics:
//   y' = a(b - y) + (p/b) s(t - t0)                                 t <= t0 + tau
//   y' = a(b - y) + (p/b) s(t - t0) - b q s(t - tau - t0) y_delayed t >  t0 + tau
// with s the dose curve shifted to the intake time and
// y_delayed = y(t - tau - t0). Continuous at the switch since s(0) = 0.
double extraversion_rhs(double t, double y_now, double y_delayed,
                        const StimulantParams& stim, const DynamicsParams& dyn,
                        const PersonalityProfile& prof);

struct SimulationResult {
    PersonalityProfile profile;
    StimulantParams stim;
    DynamicsParams dyn;
    TimeSeries y;          // extraversion
    TimeSeries s;          // drug level (intake at t0)
    TimeSeries excitation; // (p/b) s(t - t0)
    TimeSeries inhibition; // b q s(t - tau - t0) y(t - tau - t0), 0 before t0+tau
    TimeSeries balance;    // excitation - inhibition
};

// Integrates the dynamics on the grid (which must start at 0 and contain t0
// and t0+tau as exact nodes) and fills the pointwise effect series.
SimulationResult simulate(const PersonalityProfile& prof, const StimulantParams& stim,
                          const DynamicsParams& dyn, const TimeGrid& grid,
                          ExecMode mode = ExecMode::Parallel);

// All requested profiles on one grid; profiles run concurrently under
// ExecMode::Parallel and share no mutable state.
std::vector<SimulationResult> simulate_profiles(std::span<const PersonalityProfile> profs,
                                                const StimulantParams& stim,
                                                const DynamicsParams& dyn,
                                                const TimeGrid& grid,
                                                ExecMode mode = ExecMode::Parallel);

struct SummaryMetrics {
    double peak_y = 0.0;
    double peak_y_time = 0.0;
    double peak_excursion = 0.0;  // peak_y - b
    double undershoot_min = 0.0;  // min of y - b after the peak
    double return_time = 0.0;     // earliest time from which |y - b| <= 0.05 b holds to t_end
    double y_min = 0.0;
    bool went_negative = false;   // y dipped below zero somewhere
};

SummaryMetrics summary_metrics(const SimulationResult& result);

namespace detail {
// Pointwise effect-series fill kernels. The parallel kernel writes each node
// independently and is bit-identical to the serial reference.
struct EffectArrays {
    std::vector<double> s, excitation, inhibition, balance;
};
EffectArrays fill_effects_serial(const TimeSeries& y, const StimulantParams& stim,
                                 const DynamicsParams& dyn, const PersonalityProfile& prof);
EffectArrays fill_effects_parallel(const TimeSeries& y, const StimulantParams& stim,
                                   const DynamicsParams& dyn, const PersonalityProfile& prof);
} // namespace detail

} // namespace stimsim
