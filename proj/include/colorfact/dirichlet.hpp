#pragma once

#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "colorfact/arith.hpp"
#include "colorfact/family.hpp"

namespace colorfact {

/// Arithmetic function truncated to 1..N, stored densely.
class ArithSeq {
 public:
  explicit ArithSeq(std::size_t limit);
  /// values[0] is a(1).
  ArithSeq(std::size_t limit, std::vector<BigCount> values);

  /// Identity element for Dirichlet convolution: (1, 0, 0, ...).
  static ArithSeq identity(std::size_t limit);
  /// Constant sequence a(n) = value.
  static ArithSeq constant(std::size_t limit, const BigCount& value);

  [[nodiscard]] std::size_t limit() const { return values_.size(); }

  /// 1-based access.
  BigCount& operator()(std::size_t n) { return values_[n - 1]; }
  const BigCount& operator()(std::size_t n) const { return values_[n - 1]; }
  BigCount& at(std::size_t n);
  [[nodiscard]] const BigCount& at(std::size_t n) const;

  [[nodiscard]] const std::vector<BigCount>& values() const { return values_; }

  /// Equal on the common prefix 1..min(N, N').
  friend bool operator==(const ArithSeq& lhs, const ArithSeq& rhs);

 private:
  std::vector<BigCount> values_;
};

/// Dirichlet convolution (a*b)(n) = sum_{d|n} a(d) b(n/d). Limits must match.
ArithSeq convolve(const ArithSeq& a, const ArithSeq& b);

/// l-fold Dirichlet power by repeated squaring; l = 0 yields the identity.
ArithSeq power(const ArithSeq& a, unsigned l);

/// Dirichlet inverse. Requires a(1) = 1 so the result stays integral.
ArithSeq inverse(const ArithSeq& a);

/// Polynomial-valued arithmetic function: t(n, k) for 0 <= k <= Omega(n).
/// Entry n holds the coefficients of z^0, z^1, ... in one dense vector.
class BivariateTable {
 public:
  explicit BivariateTable(std::size_t limit);

  static BivariateTable identity(std::size_t limit);

  [[nodiscard]] std::size_t limit() const { return rows_.size(); }

  /// t(n, k); zero outside the stored degree range.
  [[nodiscard]] BigCount at(std::size_t n, std::size_t k) const;
  /// Mutable access; grows row n as needed.
  BigCount& ref(std::size_t n, std::size_t k);
  [[nodiscard]] const std::vector<BigCount>& row(std::size_t n) const { return rows_.at(n - 1); }

  /// Collapses z to a scalar: sum_k weight(k) * t(n, k).
  [[nodiscard]] ArithSeq evaluate(const std::function<BigCount(std::size_t)>& weight) const;

  friend bool operator==(const BivariateTable& lhs, const BivariateTable& rhs);

 private:
  std::vector<std::vector<BigCount>> rows_;
};

BivariateTable convolve(const BivariateTable& a, const BivariateTable& b);
BivariateTable power(const BivariateTable& a, unsigned l);

/// Memo table keyed by (query, prime signature). Each key is computed at most
/// once even under concurrent lookups; late arrivals wait on the first result.
class SignatureCache {
 public:
  using Compute = std::function<BigCount(const CountQuery&, const FactoredInteger& canonical)>;

  BigCount get_or_compute(const CountQuery& query, const PrimeSignature& signature, const Compute& compute);

  [[nodiscard]] std::size_t size() const;
  [[nodiscard]] std::size_t misses() const;
  void clear();

 private:
  using Key = std::tuple<CountQuery, PrimeSignature>;
  mutable std::mutex mutex_;
  std::map<Key, std::shared_future<BigCount>> entries_;
  std::size_t misses_ = 0;
};

/// Evaluates `compute` at the smallest integer sharing n's prime signature,
/// memoized in `cache`.
BigCount eval_by_signature(SignatureCache& cache, const CountQuery& query, const FactoredInteger& n,
                           const SignatureCache::Compute& compute);

/// Smallest integer with the same signature, factored.
FactoredInteger canonical_representative(const PrimeSignature& signature);

}  // namespace colorfact
