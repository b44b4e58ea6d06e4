#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "stimsim/common.hpp"

namespace stimsim {

// Genes are reals in [eps, 1-eps], spliced as 6-digit decimal strings by
// the crossover operator.
inline constexpr double gene_epsilon = 1e-6;
inline constexpr int gene_digits = 6;

double clamp_gene(double v);
// Decimal code in [1, 999999]; digits_to_gene(gene_to_digits(v)) matches v
// to within 10^-6.
std::int64_t gene_to_digits(double v);
double digits_to_gene(std::int64_t code);

using GaRng = std::mt19937_64;

struct GaConfig {
    std::size_t pop_size = 50;       // per population
    double crossover_rate = 0.75;
    double mutation_rate = 0.15;
    double mutation_range = 0.1;     // delta ~ U[-range, +range]
    std::size_t max_generations = 200;
    std::size_t stagnation_window = 25;
    std::size_t elite_count = 1;
    std::uint64_t rng_seed = 42;

    void validate() const;
};

enum class FitnessMode { PaperLiteral, PeakConstrained };

FitnessMode fitness_mode_from_string(const std::string& s);
std::string to_string(FitnessMode mode);

struct FitnessSpec {
    FitnessMode mode = FitnessMode::PeakConstrained;
    double eval_time = 120.0;        // minutes
    double dose = 1.0;
    double target_peak_time = 120.0; // peak-constrained only
    double peak_penalty_weight = 0.01; // per minute of peak mismatch

    void validate() const;
};

// Dose-curve fitness of a rate pair. PaperLiteral returns s(eval_time);
// PeakConstrained subtracts peak_penalty_weight * |peak_time - target|.
// Degenerate rate pairs score 0 (worst) instead of throwing, and results
// are clamped below at 0 for roulette compatibility.
double evaluate_fitness(double alpha, double beta, const FitnessSpec& spec);

// Index i with probability fitnesses[i] / sum; uniform when all are zero.
// All fitnesses must be >= 0.
std::size_t roulette_select(const std::vector<double>& fitnesses, GaRng& rng);

// Deterministic digit splice at cut k in 1..5: children take the leading k
// digits from one parent and the trailing digits from the other.
std::pair<double, double> splice_genes(double g1, double g2, int k);

// With probability crossover_rate, splice the 6-digit decimal strings of
// the parents at a uniform cut in 1..5; otherwise return copies.
std::pair<double, double> one_point_crossover(double g1, double g2, double crossover_rate,
                                              GaRng& rng);

// With probability mutation_rate, add delta ~ U[-range, range] and clamp.
double mutate(double g, double mutation_rate, double mutation_range, GaRng& rng);

// One generation of variation: elites (best elite_count, ties by index),
// then roulette parents -> crossover -> mutation until the population is
// refilled. One sequential RNG stream per population.
std::vector<double> evolve_population(const std::vector<double>& pop,
                                      const std::vector<double>& fitnesses,
                                      const GaConfig& config, GaRng& rng);

enum class Termination { MaxGenerations, Stagnation };
std::string to_string(Termination t);

struct GenerationStats {
    double best_fitness = 0.0;
    double mean_fitness = 0.0; // over all evaluations this generation
    double best_alpha = 0.0;
    double best_beta = 0.0;
};

struct CalibrationResult {
    double best_alpha = 0.0;
    double best_beta = 0.0;
    double best_fitness = 0.0;
    std::size_t generations_run = 0;
    Termination terminated_by = Termination::MaxGenerations;
    std::vector<GenerationStats> history; // one entry per generation
};

using FitnessFn = std::function<double(double alpha, double beta)>;

// Two-population cooperative coevolution: per generation every alpha gene
// is scored against the current best beta and vice versa. Until a first
// positive fitness appears the populations are scored index-paired and
// redrawn each generation (no signal to select on). Deterministic for a
// fixed seed; fitness evaluations may run in parallel, variation is
// sequential per population.
CalibrationResult calibrate_custom(const GaConfig& config, const FitnessFn& fitness,
                                   ExecMode mode = ExecMode::Parallel);

CalibrationResult calibrate(const GaConfig& config, const FitnessSpec& spec,
                            ExecMode mode = ExecMode::Parallel);

namespace detail {
// Batch fitness kernel (parallel writes are per-element; bit-identical to
// the serial reference).
void eval_batch_serial(const std::vector<double>& genes,
                       const std::function<double(double)>& f, std::vector<double>& out);
void eval_batch_parallel(const std::vector<double>& genes,
                         const std::function<double(double)>& f, std::vector<double>& out);
} // namespace detail

} // namespace stimsim
