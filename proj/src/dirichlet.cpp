#include "colorfact/dirichlet.hpp"

#include <algorithm>

#include "colorfact/errors.hpp"

namespace colorfact {
namespace {

void require_same_limit(std::size_t a, std::size_t b) {
  if (a != b) throw UsageError("Dirichlet convolution of sequences with different limits");
}

}  // namespace

ArithSeq::ArithSeq(std::size_t limit) : values_(limit, BigCount(0)) {
  if (limit == 0) throw UsageError("ArithSeq limit must be positive");
}

ArithSeq::ArithSeq(std::size_t limit, std::vector<BigCount> values) : values_(std::move(values)) {
  if (limit == 0 || values_.size() != limit) throw UsageError("ArithSeq needs exactly `limit` values");
}

ArithSeq ArithSeq::identity(std::size_t limit) {
  ArithSeq out(limit);
  out(1) = 1;
  return out;
}

ArithSeq ArithSeq::constant(std::size_t limit, const BigCount& value) {
  return ArithSeq(limit, std::vector<BigCount>(limit, value));
}

BigCount& ArithSeq::at(std::size_t n) {
  if (n == 0 || n > values_.size()) throw UsageError("ArithSeq index out of range");
  return values_[n - 1];
}

const BigCount& ArithSeq::at(std::size_t n) const {
  if (n == 0 || n > values_.size()) throw UsageError("ArithSeq index out of range");
  return values_[n - 1];
}

bool operator==(const ArithSeq& lhs, const ArithSeq& rhs) {
  const std::size_t common = std::min(lhs.limit(), rhs.limit());
  return std::equal(lhs.values_.begin(), lhs.values_.begin() + static_cast<std::ptrdiff_t>(common),
                    rhs.values_.begin());
}

ArithSeq convolve(const ArithSeq& a, const ArithSeq& b) {
  require_same_limit(a.limit(), b.limit());
  const std::size_t limit = a.limit();
  ArithSeq out(limit);
  for (std::size_t d = 1; d <= limit; ++d) {
    const BigCount& ad = a(d);
    if (sgn(ad) == 0) continue;
    for (std::size_t m = 1, n = d; n <= limit; ++m, n += d) {
      if (sgn(b(m)) != 0) mpz_addmul(out(n).get_mpz_t(), ad.get_mpz_t(), b(m).get_mpz_t());
    }
  }
  return out;
}

ArithSeq power(const ArithSeq& a, unsigned l) {
  ArithSeq result = ArithSeq::identity(a.limit());
  ArithSeq base = a;
  bool first = true;
  while (l > 0) {
    if (l & 1u) {
      result = first ? base : convolve(result, base);
      first = false;
    }
    l >>= 1;
    if (l > 0) base = convolve(base, base);
  }
  return result;
}

ArithSeq inverse(const ArithSeq& a) {
  if (a(1) != 1) throw DomainError("Dirichlet inverse requires a(1) = 1");
  const std::size_t limit = a.limit();
  // acc(n) collects sum_{d|n, d<n} b(d) a(n/d); b(d) is final once d is reached.
  ArithSeq b(limit);
  ArithSeq acc(limit);
  for (std::size_t d = 1; d <= limit; ++d) {
    b(d) = d == 1 ? BigCount(1) : BigCount(-acc(d));
    if (sgn(b(d)) == 0) continue;
    for (std::size_t m = 2, n = 2 * d; n <= limit; ++m, n += d) {
      if (sgn(a(m)) != 0) mpz_addmul(acc(n).get_mpz_t(), b(d).get_mpz_t(), a(m).get_mpz_t());
    }
  }
  return b;
}

BivariateTable::BivariateTable(std::size_t limit) : rows_(limit) {
  if (limit == 0) throw UsageError("BivariateTable limit must be positive");
}

BivariateTable BivariateTable::identity(std::size_t limit) {
  BivariateTable out(limit);
  out.ref(1, 0) = 1;
  return out;
}

BigCount BivariateTable::at(std::size_t n, std::size_t k) const {
  const auto& r = rows_.at(n - 1);
  return k < r.size() ? r[k] : BigCount(0);
}

BigCount& BivariateTable::ref(std::size_t n, std::size_t k) {
  auto& r = rows_.at(n - 1);
  if (r.size() <= k) r.resize(k + 1, BigCount(0));
  return r[k];
}

ArithSeq BivariateTable::evaluate(const std::function<BigCount(std::size_t)>& weight) const {
  ArithSeq out(limit());
  for (std::size_t n = 1; n <= limit(); ++n) {
    const auto& r = rows_[n - 1];
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (sgn(r[k]) != 0) out(n) += weight(k) * r[k];
    }
  }
  return out;
}

bool operator==(const BivariateTable& lhs, const BivariateTable& rhs) {
  const std::size_t common = std::min(lhs.limit(), rhs.limit());
  for (std::size_t n = 1; n <= common; ++n) {
    const std::size_t degree = std::max(lhs.rows_[n - 1].size(), rhs.rows_[n - 1].size());
    for (std::size_t k = 0; k < degree; ++k) {
      if (lhs.at(n, k) != rhs.at(n, k)) return false;
    }
  }
  return true;
}

BivariateTable convolve(const BivariateTable& a, const BivariateTable& b) {
  require_same_limit(a.limit(), b.limit());
  const std::size_t limit = a.limit();
  BivariateTable out(limit);
  for (std::size_t d = 1; d <= limit; ++d) {
    const auto& ad = a.row(d);
    if (ad.empty()) continue;
    for (std::size_t m = 1, n = d; n <= limit; ++m, n += d) {
      const auto& bm = b.row(m);
      if (bm.empty()) continue;
      for (std::size_t i = 0; i < ad.size(); ++i) {
        if (sgn(ad[i]) == 0) continue;
        for (std::size_t j = 0; j < bm.size(); ++j) {
          if (sgn(bm[j]) != 0) mpz_addmul(out.ref(n, i + j).get_mpz_t(), ad[i].get_mpz_t(), bm[j].get_mpz_t());
        }
      }
    }
  }
  return out;
}

BivariateTable power(const BivariateTable& a, unsigned l) {
  BivariateTable result = BivariateTable::identity(a.limit());
  BivariateTable base = a;
  bool first = true;
  while (l > 0) {
    if (l & 1u) {
      result = first ? base : convolve(result, base);
      first = false;
    }
    l >>= 1;
    if (l > 0) base = convolve(base, base);
  }
  return result;
}

BigCount SignatureCache::get_or_compute(const CountQuery& query, const PrimeSignature& signature,
                                        const Compute& compute) {
  Key key{query, signature};
  std::promise<BigCount> promise;
  std::shared_future<BigCount> future;
  bool owner = false;
  {
    std::lock_guard lock(mutex_);
    auto it = entries_.find(key);
    if (it != entries_.end()) {
      future = it->second;
    } else {
      future = promise.get_future().share();
      entries_.emplace(key, future);
      ++misses_;
      owner = true;
    }
  }
  if (owner) {
    try {
      promise.set_value(compute(query, canonical_representative(signature)));
    } catch (...) {
      {
        std::lock_guard lock(mutex_);
        entries_.erase(key);
      }
      promise.set_exception(std::current_exception());
    }
  }
  return future.get();
}

std::size_t SignatureCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

std::size_t SignatureCache::misses() const {
  std::lock_guard lock(mutex_);
  return misses_;
}

void SignatureCache::clear() {
  std::lock_guard lock(mutex_);
  entries_.clear();
  misses_ = 0;
}

FactoredInteger canonical_representative(const PrimeSignature& signature) {
  const auto& exps = signature.exponents();
  const auto primes = first_primes(exps.size());
  std::vector<PrimePower> factors;
  factors.reserve(exps.size());
  for (std::size_t j = 0; j < exps.size(); ++j) factors.push_back({primes[j], exps[j]});
  return FactoredInteger(std::move(factors));
}

BigCount eval_by_signature(SignatureCache& cache, const CountQuery& query, const FactoredInteger& n,
                           const SignatureCache::Compute& compute) {
  return cache.get_or_compute(query, n.signature(), compute);
}

}  // namespace colorfact
