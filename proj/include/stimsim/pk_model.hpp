#pragma once

namespace stimsim {

// Parameters of the single-dose plasma curve
//
//   s(t) = alpha * d * (exp(-alpha*t) - exp(-beta*t)) / (beta - alpha)
//
// All times are minutes, rates 1/minute. The curve is undefined at
// alpha == beta; callers must keep the rates apart (see rate_gap_tol).
struct StimulantParams {
    double dose = 1.0;     // d, normalized dose units
    double alpha = 0.0121; // assimilation rate
    double beta = 0.0071;  // consumption/elimination rate

    // Throws std::invalid_argument on violated invariants.
    void validate() const;
};

// |alpha - beta| below this is treated as degenerate.
inline constexpr double rate_gap_tol = 1e-12;

// Plasma level at time t >= 0 since intake. Zero at t = 0, nonnegative
// everywhere, linear in dose. Throws std::domain_error for t < 0 and
// std::invalid_argument for degenerate rates.
double drug_level(double t, const StimulantParams& params);

// Level with intake at t0: zero for t < t0, else drug_level(t - t0).
double shifted_drug_level(double t, double t0, const StimulantParams& params);

// Analytic argmax of drug_level: ln(alpha/beta) / (alpha - beta).
double peak_time(const StimulantParams& params);

} // namespace stimsim
