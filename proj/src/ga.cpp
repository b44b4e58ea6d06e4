#include "stimsim/ga.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "stimsim/pk_model.hpp"

namespace stimsim {

double clamp_gene(double v) {
    return std::clamp(v, gene_epsilon, 1.0 - gene_epsilon);
}

std::int64_t gene_to_digits(double v) {
    const auto code = static_cast<std::int64_t>(std::llround(v * 1e6));
    return std::clamp<std::int64_t>(code, 1, 999999);
}

double digits_to_gene(std::int64_t code) {
    return static_cast<double>(code) / 1e6;
}

void GaConfig::validate() const {
    if (pop_size < 2)
        throw std::invalid_argument("GaConfig: pop_size must be >= 2");
    if (!(crossover_rate >= 0.0 && crossover_rate <= 1.0))
        throw std::invalid_argument("GaConfig: crossover_rate must be in [0, 1]");
    if (!(mutation_rate >= 0.0 && mutation_rate <= 1.0))
        throw std::invalid_argument("GaConfig: mutation_rate must be in [0, 1]");
    if (!(mutation_range > 0.0))
        throw std::invalid_argument("GaConfig: mutation_range must be > 0");
    if (max_generations == 0)
        throw std::invalid_argument("GaConfig: max_generations must be >= 1");
    if (stagnation_window == 0)
        throw std::invalid_argument("GaConfig: stagnation_window must be >= 1");
    if (elite_count >= pop_size)
        throw std::invalid_argument("GaConfig: elite_count must be < pop_size");
}

FitnessMode fitness_mode_from_string(const std::string& s) {
    if (s == "paper_literal") return FitnessMode::PaperLiteral;
    if (s == "peak_constrained") return FitnessMode::PeakConstrained;
    throw std::invalid_argument("unknown fitness mode '" + s +
                                "' (expected paper_literal or peak_constrained)");
}

std::string to_string(FitnessMode mode) {
    return mode == FitnessMode::PaperLiteral ? "paper_literal" : "peak_constrained";
}

std::string to_string(Termination t) {
    return t == Termination::MaxGenerations ? "max_generations" : "stagnation";
}

void FitnessSpec::validate() const {
    if (!(eval_time > 0.0))
        throw std::invalid_argument("FitnessSpec: eval_time must be > 0");
    if (!(dose >= 0.0))
        throw std::invalid_argument("FitnessSpec: dose must be >= 0");
    if (!(target_peak_time > 0.0))
        throw std::invalid_argument("FitnessSpec: target_peak_time must be > 0");
    if (!(peak_penalty_weight >= 0.0))
        throw std::invalid_argument("FitnessSpec: peak_penalty_weight must be >= 0");
}

double evaluate_fitness(double alpha, double beta, const FitnessSpec& spec) {
    if (std::abs(alpha - beta) < rate_gap_tol)
        return 0.0; // degenerate pair scores worst, no exception
    const StimulantParams params{spec.dose, alpha, beta};
    double f = drug_level(spec.eval_time, params);
    if (spec.mode == FitnessMode::PeakConstrained)
        f -= spec.peak_penalty_weight * std::abs(peak_time(params) - spec.target_peak_time);
    return std::max(f, 0.0);
}

std::size_t roulette_select(const std::vector<double>& fitnesses, GaRng& rng) {
    if (fitnesses.empty())
        throw std::invalid_argument("roulette_select: empty fitness list");
    const double total = std::accumulate(fitnesses.begin(), fitnesses.end(), 0.0);
    if (!(total > 0.0)) {
        std::uniform_int_distribution<std::size_t> uniform(0, fitnesses.size() - 1);
        return uniform(rng);
    }
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double x = unit(rng) * total;
    double acc = 0.0;
    for (std::size_t i = 0; i < fitnesses.size(); ++i) {
        acc += fitnesses[i];
        if (x <= acc) return i;
    }
    return fitnesses.size() - 1;
}

std::pair<double, double> splice_genes(double g1, double g2, int k) {
    if (k < 1 || k > gene_digits - 1)
        throw std::invalid_argument("splice_genes: cut must be in 1.." +
                                    std::to_string(gene_digits - 1));
    std::int64_t m = 1;
    for (int i = 0; i < gene_digits - k; ++i) m *= 10;
    const std::int64_t c1 = gene_to_digits(g1);
    const std::int64_t c2 = gene_to_digits(g2);
    const std::int64_t child1 = (c1 / m) * m + c2 % m;
    const std::int64_t child2 = (c2 / m) * m + c1 % m;
    return {clamp_gene(digits_to_gene(child1)), clamp_gene(digits_to_gene(child2))};
}

std::pair<double, double> one_point_crossover(double g1, double g2, double crossover_rate,
                                              GaRng& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    if (unit(rng) >= crossover_rate)
        return {g1, g2};
    std::uniform_int_distribution<int> cut(1, gene_digits - 1);
    return splice_genes(g1, g2, cut(rng));
}

double mutate(double g, double mutation_rate, double mutation_range, GaRng& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    if (unit(rng) >= mutation_rate)
        return g;
    std::uniform_real_distribution<double> delta(-mutation_range, mutation_range);
    return clamp_gene(g + delta(rng));
}

namespace detail {

void eval_batch_serial(const std::vector<double>& genes,
                       const std::function<double(double)>& f, std::vector<double>& out) {
    out.resize(genes.size());
    for (std::size_t i = 0; i < genes.size(); ++i)
        out[i] = f(genes[i]);
}

void eval_batch_parallel(const std::vector<double>& genes,
                         const std::function<double(double)>& f, std::vector<double>& out) {
    out.resize(genes.size());
    const auto n = static_cast<std::int64_t>(genes.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] = f(genes[static_cast<std::size_t>(i)]);
}

} // namespace detail

std::vector<double> evolve_population(const std::vector<double>& pop,
                                      const std::vector<double>& fitnesses,
                                      const GaConfig& config, GaRng& rng) {
    std::vector<std::size_t> order(pop.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return fitnesses[a] > fitnesses[b]; });

    std::vector<double> next;
    next.reserve(pop.size());
    for (std::size_t i = 0; i < config.elite_count; ++i)
        next.push_back(pop[order[i]]);

    while (next.size() < pop.size()) {
        const std::size_t pa = roulette_select(fitnesses, rng);
        const std::size_t pb = roulette_select(fitnesses, rng);
        auto [c1, c2] = one_point_crossover(pop[pa], pop[pb], config.crossover_rate, rng);
        next.push_back(mutate(c1, config.mutation_rate, config.mutation_range, rng));
        if (next.size() < pop.size())
            next.push_back(mutate(c2, config.mutation_rate, config.mutation_range, rng));
    }
    return next;
}

namespace {

std::vector<double> random_population(std::size_t n, GaRng& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> pop(n);
    for (auto& g : pop) g = clamp_gene(unit(rng));
    return pop;
}

std::size_t argmax(const std::vector<double>& v) {
    return static_cast<std::size_t>(
        std::distance(v.begin(), std::max_element(v.begin(), v.end())));
}

} // namespace

CalibrationResult calibrate_custom(const GaConfig& config, const FitnessFn& fitness,
                                   ExecMode mode) {
    config.validate();
    if (!fitness)
        throw std::invalid_argument("calibrate: empty fitness function");

    // Independent sequential streams per population.
    GaRng rng_a(config.rng_seed);
    GaRng rng_b(config.rng_seed ^ 0x9e3779b97f4a7c15ull);

    std::vector<double> pop_a = random_population(config.pop_size, rng_a);
    std::vector<double> pop_b = random_population(config.pop_size, rng_b);

    auto batch = [&](const std::vector<double>& genes, const std::function<double(double)>& f,
                     std::vector<double>& out) {
        if (mode == ExecMode::Parallel)
            detail::eval_batch_parallel(genes, f, out);
        else
            detail::eval_batch_serial(genes, f, out);
    };

    CalibrationResult result;
    result.history.reserve(config.max_generations);
    bool signal = false; // a positive fitness has been seen
    std::vector<double> fit_a(config.pop_size), fit_b(config.pop_size);

    for (std::size_t gen = 0; gen < config.max_generations; ++gen) {
        double eval_sum = 0.0;
        std::size_t eval_count = 0;
        if (!signal) {
            // No usable best partner yet: score index-paired.
            for (std::size_t i = 0; i < config.pop_size; ++i) {
                fit_a[i] = fitness(pop_a[i], pop_b[i]);
                fit_b[i] = fit_a[i];
            }
            eval_sum = std::accumulate(fit_a.begin(), fit_a.end(), 0.0);
            eval_count = config.pop_size;
            const std::size_t k = argmax(fit_a);
            if (fit_a[k] > 0.0) {
                result.best_alpha = pop_a[k];
                result.best_beta = pop_b[k];
                result.best_fitness = fit_a[k];
                signal = true;
            }
        } else {
            batch(pop_a, [&](double a) { return fitness(a, result.best_beta); }, fit_a);
            result.best_alpha = pop_a[argmax(fit_a)];
            batch(pop_b, [&](double b) { return fitness(result.best_alpha, b); }, fit_b);
            const std::size_t kb = argmax(fit_b);
            result.best_beta = pop_b[kb];
            result.best_fitness = fit_b[kb];
            eval_sum = std::accumulate(fit_a.begin(), fit_a.end(), 0.0) +
                       std::accumulate(fit_b.begin(), fit_b.end(), 0.0);
            eval_count = 2 * config.pop_size;
        }

        result.history.push_back({result.best_fitness,
                                  eval_sum / static_cast<double>(eval_count),
                                  result.best_alpha, result.best_beta});
        result.generations_run = gen + 1;

        if (gen >= config.stagnation_window && result.best_fitness > 0.0) {
            const double before = result.history[gen - config.stagnation_window].best_fitness;
            if (result.best_fitness - before < 1e-9) {
                result.terminated_by = Termination::Stagnation;
                return result;
            }
        }

        if (!signal) {
            // Nothing to select on; redraw both populations.
            pop_a = random_population(config.pop_size, rng_a);
            pop_b = random_population(config.pop_size, rng_b);
        } else {
            pop_a = evolve_population(pop_a, fit_a, config, rng_a);
            pop_b = evolve_population(pop_b, fit_b, config, rng_b);
        }
    }

    result.terminated_by = Termination::MaxGenerations;
    return result;
}

CalibrationResult calibrate(const GaConfig& config, const FitnessSpec& spec, ExecMode mode) {
    spec.validate();
    return calibrate_custom(
        config, [&spec](double a, double b) { return evaluate_fitness(a, b, spec); }, mode);
}

} // namespace stimsim
