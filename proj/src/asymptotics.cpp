#include "colorfact/asymptotics.hpp"

#include <array>
#include <cmath>
#include <string>

#include "colorfact/errors.hpp"

namespace colorfact {
namespace {

constexpr int kCutoff = 50;
constexpr double kMinS = 1.0 + 1e-6;
constexpr double kMaxS = 40.0;

// B_{2j} / (2j)! for j = 1..6.
constexpr std::array<long double, 6> kBernoulliOverFactorial = {
    1.0L / 6.0L / 2.0L,
    -1.0L / 30.0L / 24.0L,
    1.0L / 42.0L / 720.0L,
    -1.0L / 30.0L / 40320.0L,
    5.0L / 66.0L / 3628800.0L,
    -691.0L / 2730.0L / 479001600.0L,
};

void check_domain(double s) {
  if (!(s > kMinS)) throw DomainError("zeta: s must exceed 1 + 1e-6, got " + std::to_string(s));
}

using u128 = unsigned __int128;

// Sieve in a fixed-width type; returns false on overflow.
bool sieve_sum_u128(int l, std::uint64_t x, BigCount& sum) {
  std::vector<u128> value(x + 1, 0);
  const u128 weight = static_cast<u128>(l);
  value[1] = 1;
  u128 total = 0;
  for (std::uint64_t d = 1; d <= x; ++d) {
    // value[d] holds the proper-divisor sum until d is reached.
    if (d > 1 && __builtin_mul_overflow(value[d], weight, &value[d])) return false;
    if (__builtin_add_overflow(total, value[d], &total)) return false;
    for (std::uint64_t n = 2 * d; n <= x; n += d) {
      if (__builtin_add_overflow(value[n], value[d], &value[n])) return false;
    }
  }
  const auto hi = static_cast<std::uint64_t>(total >> 64);
  const auto lo = static_cast<std::uint64_t>(total);
  sum = BigCount(static_cast<unsigned long>(hi));
  sum <<= 64;
  sum += BigCount(static_cast<unsigned long>(lo));
  return true;
}

}  // namespace

double zeta(double s) {
  check_domain(s);
  const long double sl = s;
  const long double m = kCutoff;
  long double sum = 0;
  for (int n = kCutoff - 1; n >= 1; --n) sum += std::pow(static_cast<long double>(n), -sl);
  sum += std::pow(m, 1 - sl) / (sl - 1) + std::pow(m, -sl) / 2;
  long double rising = sl;  // s (s+1) ... (s + 2j - 2)
  for (std::size_t j = 0; j < kBernoulliOverFactorial.size(); ++j) {
    const long double order = 2.0L * static_cast<long double>(j + 1);
    sum += kBernoulliOverFactorial[j] * rising * std::pow(m, -sl - order + 1);
    rising *= (sl + order - 1) * (sl + order);
  }
  return static_cast<double>(sum);
}

double zeta_prime(double s) {
  check_domain(s);
  const long double sl = s;
  const long double m = kCutoff;
  const long double log_m = std::log(m);
  long double sum = 0;
  for (int n = kCutoff - 1; n >= 2; --n) {
    const long double nn = n;
    sum -= std::log(nn) * std::pow(nn, -sl);
  }
  const long double head = std::pow(m, 1 - sl);
  sum += -head * log_m / (sl - 1) - head / ((sl - 1) * (sl - 1));
  sum += -log_m * std::pow(m, -sl) / 2;
  long double rising = sl;
  long double log_derivative = 1.0L / sl;  // d/ds log(rising)
  for (std::size_t j = 0; j < kBernoulliOverFactorial.size(); ++j) {
    const long double order = 2.0L * static_cast<long double>(j + 1);
    const long double tail = std::pow(m, -sl - order + 1);
    sum += kBernoulliOverFactorial[j] * rising * (log_derivative - log_m) * tail;
    rising *= (sl + order - 1) * (sl + order);
    log_derivative += 1.0L / (sl + order - 1) + 1.0L / (sl + order);
  }
  return static_cast<double>(sum);
}

AsymptoticParams solve_beta(int l) {
  if (l < 1) throw DomainError("solve_beta: l must be >= 1");
  const double target = static_cast<double>(l + 1) / static_cast<double>(l);
  double lo = kMinS * (1 + 1e-12);
  double hi = kMaxS;
  if (zeta(hi) > target) throw DomainError("solve_beta: root lies beyond s = 40 for l = " + std::to_string(l));
  // zeta is decreasing: zeta(lo) > target > zeta(hi).
  for (int iter = 0; iter < 200 && hi - lo > 1e-13 * hi; ++iter) {
    const double mid = 0.5 * (lo + hi);
    (zeta(mid) > target ? lo : hi) = mid;
  }
  double beta = 0.5 * (lo + hi);
  double residual = std::abs(zeta(beta) - target);
  for (int iter = 0; iter < 4; ++iter) {
    const double candidate = beta - (zeta(beta) - target) / zeta_prime(beta);
    if (!(candidate > kMinS)) break;
    const double r = std::abs(zeta(candidate) - target);
    if (!(r < residual)) break;
    beta = candidate;
    residual = r;
  }
  AsymptoticParams p;
  p.l = l;
  p.beta = beta;
  p.residual = residual;
  const double slope = zeta_prime(beta);
  p.residue = -1.0 / (l * slope);
  p.alpha = p.residue / beta;
  return p;
}

std::vector<BigCount> ordered_colored_sieve(int l, std::uint64_t x) {
  if (l < 1) throw DomainError("ordered_colored_sieve: l must be >= 1");
  if (x > kSieveGuard) throw ResourceError("sieve limit above " + std::to_string(kSieveGuard));
  std::vector<BigCount> value(x + 1, BigCount(0));
  if (x == 0) return {};
  value[1] = 1;
  for (std::uint64_t d = 1; d <= x; ++d) {
    if (d > 1) value[d] *= l;
    for (std::uint64_t n = 2 * d; n <= x; n += d) value[n] += value[d];
  }
  value.erase(value.begin());
  return value;
}

AverageOrderReport average_order_report(int l, std::uint64_t x) {
  if (x < 1) throw DomainError("average_order_report: x must be >= 1");
  if (x > kSieveGuard) throw ResourceError("average_order_report: x above " + std::to_string(kSieveGuard));
  AverageOrderReport report;
  report.params = solve_beta(l);
  report.x = x;
  if (!sieve_sum_u128(l, x, report.partial_sum)) {
    report.partial_sum = 0;
    for (const auto& v : ordered_colored_sieve(l, x)) report.partial_sum += v;
  }
  const double xd = static_cast<double>(x);
  report.empirical = report.partial_sum.get_d() / xd;
  const double growth = std::pow(xd, report.params.beta - 1);
  report.predicted = report.params.alpha * growth;
  report.ratio = report.empirical / report.predicted;
  report.ratio_residue = report.empirical / (report.params.residue * growth);
  return report;
}

}  // namespace colorfact
