#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <vector>

namespace colorfact {

/// Exact signed integer used for every count.
using BigCount = mpz_class;

struct PrimePower {
  std::uint64_t prime = 0;
  int exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Multiset of exponents of a prime factorization, stored descending.
class PrimeSignature {
 public:
  PrimeSignature() = default;
  explicit PrimeSignature(std::vector<int> exponents);

  [[nodiscard]] const std::vector<int>& exponents() const { return exponents_; }
  [[nodiscard]] bool empty() const { return exponents_.empty(); }

  /// Smallest integer with this signature: 2^e1 * 3^e2 * ... with e1 >= e2 >= ...
  /// Throws DomainError if it does not fit in 64 bits.
  [[nodiscard]] std::uint64_t canonical_value() const;

  friend auto operator<=>(const PrimeSignature&, const PrimeSignature&) = default;

 private:
  std::vector<int> exponents_;
};

/// A positive integer together with its canonical factorization.
class FactoredInteger {
 public:
  FactoredInteger() = default;  // the integer 1
  /// Builds from prime powers; validates ordering and recomputes the value.
  explicit FactoredInteger(std::vector<PrimePower> factors);

  [[nodiscard]] std::uint64_t value() const { return value_; }
  [[nodiscard]] const std::vector<PrimePower>& factors() const { return factors_; }

  /// Number of distinct prime factors.
  [[nodiscard]] int omega() const { return static_cast<int>(factors_.size()); }
  /// Number of prime factors with multiplicity.
  [[nodiscard]] int big_omega() const;
  [[nodiscard]] bool squarefree() const;
  /// Exponent vector in ascending prime order.
  [[nodiscard]] std::vector<int> exponents() const;
  [[nodiscard]] PrimeSignature signature() const;

  friend bool operator==(const FactoredInteger&, const FactoredInteger&) = default;

 private:
  std::uint64_t value_ = 1;
  std::vector<PrimePower> factors_;
};

/// Trial division by a cached prime table. Throws DomainError for n = 0.
FactoredInteger factorize(std::uint64_t n);

/// All divisors, ascending.
std::vector<std::uint64_t> divisors(const FactoredInteger& f);

/// The first `count` primes, ascending.
std::vector<std::uint64_t> first_primes(std::size_t count);

/// Product of the first m primes. Throws DomainError past 64 bits (m > 15).
std::uint64_t primorial(int m);

/// C(n, k); zero when k < 0 or k > n.
BigCount binomial(std::int64_t n, std::int64_t k);

/// Number of size-m multisets drawn from l kinds, C(l + m - 1, m).
BigCount multichoose(std::int64_t l, std::int64_t m);

/// Stirling numbers of the second kind, S(0,0) = 1.
BigCount stirling2(int m, int k);

BigCount factorial(int n);

/// base^exp for a machine-width base (may be negative).
BigCount ipow(std::int64_t base, unsigned exp);

}  // namespace colorfact
