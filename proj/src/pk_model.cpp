#include "stimsim/pk_model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace stimsim {

void StimulantParams::validate() const {
    if (!(dose >= 0.0))
        throw std::invalid_argument("dose must be >= 0, got " + std::to_string(dose));
    if (!(alpha > 0.0))
        throw std::invalid_argument("alpha must be > 0, got " + std::to_string(alpha));
    if (!(beta > 0.0))
        throw std::invalid_argument("beta must be > 0, got " + std::to_string(beta));
    if (!(std::abs(alpha - beta) >= rate_gap_tol))
        throw std::invalid_argument("alpha and beta must differ by at least 1e-12");
}

double drug_level(double t, const StimulantParams& params) {
    if (t < 0.0)
        throw std::domain_error("drug_level: t must be >= 0, got " + std::to_string(t));
    if (!(std::abs(params.alpha - params.beta) >= rate_gap_tol))
        throw std::invalid_argument("drug_level: degenerate rates (alpha == beta)");
    const double a = params.alpha;
    const double b = params.beta;
    return a * params.dose * (std::exp(-a * t) - std::exp(-b * t)) / (b - a);
}

double shifted_drug_level(double t, double t0, const StimulantParams& params) {
    if (t0 < 0.0)
        throw std::domain_error("shifted_drug_level: t0 must be >= 0");
    if (t < t0)
        return 0.0;
    return drug_level(t - t0, params);
}

double peak_time(const StimulantParams& params) {
    if (!(std::abs(params.alpha - params.beta) >= rate_gap_tol))
        throw std::invalid_argument("peak_time: degenerate rates (alpha == beta)");
    return std::log(params.alpha / params.beta) / (params.alpha - params.beta);
}

} // namespace stimsim
