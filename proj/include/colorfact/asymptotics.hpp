#pragma once

#include <cstdint>

#include "colorfact/arith.hpp"

namespace colorfact {

/// Riemann zeta on the real axis s > 1, by Euler-Maclaurin summation with
/// 50 explicit terms and Bernoulli corrections through B_12.
/// Throws DomainError for s <= 1 + 1e-6.
double zeta(double s);
/// Derivative of zeta, from the term-wise differentiated expansion.
double zeta_prime(double s);

/// Growth constants of the mean of the ordered l-colored counts.
struct AsymptoticParams {
  int l = 1;
  double beta = 0;      // zeta(beta) = (l + 1) / l
  double alpha = 0;     // -1 / (l * beta * zeta'(beta)): coefficient of x^(beta-1) in the mean
  double residue = 0;   // -1 / (l * zeta'(beta)): residue of the Dirichlet series at beta
  double residual = 0;  // |zeta(beta) - (l + 1) / l|
};

inline constexpr double kBetaTolerance = 1e-10;

/// Bisection on [1 + 1e-6, 40] followed by Newton polishing.
AsymptoticParams solve_beta(int l);

struct AverageOrderReport {
  AsymptoticParams params;
  std::uint64_t x = 0;
  BigCount partial_sum;  // sum_{n <= x} A~_l(n), exact
  double empirical = 0;  // partial_sum / x
  double predicted = 0;  // alpha * x^(beta - 1)
  double ratio = 0;      // empirical / predicted
  double ratio_residue = 0;  // empirical / (residue * x^(beta - 1))
};

inline constexpr std::uint64_t kSieveGuard = 10'000'000;

/// Values A~_l(1..x) by the divisor-sum sieve A~_l(n) = l * sum_{d | n, d < n} A~_l(d).
/// Index 0 of the result is n = 1.
std::vector<BigCount> ordered_colored_sieve(int l, std::uint64_t x);

/// Exact partial sum of A~_l up to x compared with the predicted mean.
/// Throws ResourceError for x above 10^7.
AverageOrderReport average_order_report(int l, std::uint64_t x);

}  // namespace colorfact
