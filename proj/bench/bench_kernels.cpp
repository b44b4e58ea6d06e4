// Serial vs OpenMP comparison of the data-parallel kernels:
// effect-series fill, GA batch fitness evaluation, multi-profile runs.

#include <chrono>
#include <cstdio>
#include <span>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "stimsim/dde.hpp"
#include "stimsim/extraversion.hpp"
#include "stimsim/ga.hpp"

using namespace stimsim;
using clock_type = std::chrono::steady_clock;

namespace {

double ms(clock_type::time_point a, clock_type::time_point b) {
    return std::chrono::duration<double, std::milli>(b - a).count();
}

template <typename F>
double time_best_of(int reps, F&& body) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = clock_type::now();
        body();
        const auto t1 = clock_type::now();
        best = std::min(best, ms(t0, t1));
    }
    return best;
}

volatile double sink;

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP: %d threads\n", omp_get_max_threads());
#else
    std::printf("OpenMP: not enabled (serial build)\n");
#endif

    const StimulantParams stim;
    const DynamicsParams dyn;
    const TimeGrid grid{0.0, 725.0, 0.01};
    const auto prof = PersonalityProfile::introvert();

    // One integration feeds both effect-fill variants.
    const SimulationResult base = simulate(prof, stim, dyn, grid, ExecMode::Serial);
    const TimeSeries& y = base.y;

    const double fill_serial = time_best_of(5, [&] {
        auto eff = detail::fill_effects_serial(y, stim, dyn, prof);
        sink = eff.balance.back();
    });
    const double fill_parallel = time_best_of(5, [&] {
        auto eff = detail::fill_effects_parallel(y, stim, dyn, prof);
        sink = eff.balance.back();
    });
    std::printf("effect fill, %zu nodes:        serial %8.3f ms   parallel %8.3f ms   speedup %.2fx\n",
                y.size(), fill_serial, fill_parallel, fill_serial / fill_parallel);

    const FitnessSpec spec;
    std::vector<double> genes(200000);
    for (std::size_t i = 0; i < genes.size(); ++i)
        genes[i] = clamp_gene(static_cast<double>(i + 1) / static_cast<double>(genes.size() + 1));
    std::vector<double> fits;
    auto fitness_one = [&](double a) { return evaluate_fitness(a, 0.0071, spec); };
    const double eval_serial = time_best_of(5, [&] {
        detail::eval_batch_serial(genes, fitness_one, fits);
        sink = fits.back();
    });
    const double eval_parallel = time_best_of(5, [&] {
        detail::eval_batch_parallel(genes, fitness_one, fits);
        sink = fits.back();
    });
    std::printf("fitness batch, %zu genes:    serial %8.3f ms   parallel %8.3f ms   speedup %.2fx\n",
                genes.size(), eval_serial, eval_parallel, eval_serial / eval_parallel);

    const std::vector<PersonalityProfile> all = {PersonalityProfile::extrovert(),
                                                 PersonalityProfile::ambivert(),
                                                 PersonalityProfile::introvert()};
    const double profiles_serial = time_best_of(3, [&] {
        auto rs = simulate_profiles(all, stim, dyn, grid, ExecMode::Serial);
        sink = rs.back().y.back();
    });
    const double profiles_parallel = time_best_of(3, [&] {
        auto rs = simulate_profiles(all, stim, dyn, grid, ExecMode::Parallel);
        sink = rs.back().y.back();
    });
    std::printf("three-profile simulate:        serial %8.3f ms   parallel %8.3f ms   speedup %.2fx\n",
                profiles_serial, profiles_parallel, profiles_serial / profiles_parallel);
    return 0;
}
