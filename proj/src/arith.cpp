#include "colorfact/arith.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <shared_mutex>
#include <string>

#include "colorfact/errors.hpp"

namespace colorfact {
namespace {

constexpr std::uint64_t kSieveLimit = 1u << 20;
constexpr std::int64_t kPascalRows = 1024;

const std::vector<std::uint64_t>& small_primes() {
  static const std::vector<std::uint64_t> primes = [] {
    std::vector<bool> composite(kSieveLimit + 1, false);
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 2; i <= kSieveLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = i * i; j <= kSieveLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

bool mul_overflows(std::uint64_t a, std::uint64_t b, std::uint64_t& out) {
  return __builtin_mul_overflow(a, b, &out);
}

// Lazily grown lower-triangular table. Readers share the lock; growth is
// exclusive, so concurrent reads after warm-up never block each other.
class TriangleCache {
 public:
  using RowBuilder = void (*)(std::vector<std::vector<BigCount>>&, std::size_t);

  explicit TriangleCache(RowBuilder build) : build_(build) {}

  BigCount get(std::size_t row, std::size_t col) {
    {
      std::shared_lock lock(mutex_);
      if (row < rows_.size()) return col <= row ? rows_[row][col] : BigCount(0);
    }
    std::unique_lock lock(mutex_);
    while (rows_.size() <= row) build_(rows_, rows_.size());
    return col <= row ? rows_[row][col] : BigCount(0);
  }

 private:
  RowBuilder build_;
  std::shared_mutex mutex_;
  std::vector<std::vector<BigCount>> rows_;
};

void pascal_row(std::vector<std::vector<BigCount>>& rows, std::size_t n) {
  std::vector<BigCount> row(n + 1, 1);
  for (std::size_t k = 1; k < n; ++k) row[k] = rows[n - 1][k - 1] + rows[n - 1][k];
  rows.push_back(std::move(row));
}

void stirling_row(std::vector<std::vector<BigCount>>& rows, std::size_t m) {
  std::vector<BigCount> row(m + 1, 0);
  if (m == 0) {
    row[0] = 1;
  } else {
    const auto& prev = rows[m - 1];
    for (std::size_t k = 1; k <= m; ++k) {
      BigCount above = k < m ? prev[k] : BigCount(0);
      row[k] = BigCount(static_cast<unsigned long>(k)) * above + prev[k - 1];
    }
  }
  rows.push_back(std::move(row));
}

TriangleCache& pascal_cache() {
  static TriangleCache cache(pascal_row);
  return cache;
}

TriangleCache& stirling_cache() {
  static TriangleCache cache(stirling_row);
  return cache;
}

}  // namespace

PrimeSignature::PrimeSignature(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  if (std::any_of(exponents_.begin(), exponents_.end(), [](int e) { return e < 1; })) {
    throw DomainError("prime signature exponents must be positive");
  }
  std::sort(exponents_.begin(), exponents_.end(), std::greater<>());
}

std::uint64_t PrimeSignature::canonical_value() const {
  const auto primes = first_primes(exponents_.size());
  std::uint64_t value = 1;
  for (std::size_t j = 0; j < exponents_.size(); ++j) {
    for (int e = 0; e < exponents_[j]; ++e) {
      if (mul_overflows(value, primes[j], value)) {
        throw DomainError("canonical integer of signature exceeds 64 bits");
      }
    }
  }
  return value;
}

FactoredInteger::FactoredInteger(std::vector<PrimePower> factors) : factors_(std::move(factors)) {
  std::uint64_t value = 1;
  std::uint64_t last = 1;
  for (const auto& [p, e] : factors_) {
    if (p <= last || e < 1) throw DomainError("prime powers must be ascending with positive exponents");
    last = p;
    for (int i = 0; i < e; ++i) {
      if (mul_overflows(value, p, value)) throw DomainError("factored integer exceeds 64 bits");
    }
  }
  value_ = value;
}

int FactoredInteger::big_omega() const {
  int total = 0;
  for (const auto& pp : factors_) total += pp.exponent;
  return total;
}

bool FactoredInteger::squarefree() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const PrimePower& pp) { return pp.exponent == 1; });
}

std::vector<int> FactoredInteger::exponents() const {
  std::vector<int> out;
  out.reserve(factors_.size());
  for (const auto& pp : factors_) out.push_back(pp.exponent);
  return out;
}

PrimeSignature FactoredInteger::signature() const { return PrimeSignature(exponents()); }

FactoredInteger factorize(std::uint64_t n) {
  if (n == 0) throw DomainError("factorize: n must be positive");
  std::vector<PrimePower> factors;
  auto strip = [&](std::uint64_t p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) factors.push_back({p, e});
  };
  for (std::uint64_t p : small_primes()) {
    if (p * p > n) break;
    strip(p);
  }
  // Past the table, continue with odd candidates; only reached for inputs
  // with a prime factor above 2^20.
  for (std::uint64_t d = kSieveLimit + 1; n > 1 && d <= n / d; d += 2) strip(d);
  if (n > 1) factors.push_back({n, 1});
  return FactoredInteger(std::move(factors));
}

std::vector<std::uint64_t> divisors(const FactoredInteger& f) {
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, e] : f.factors()) {
    const std::size_t base = out.size();
    std::uint64_t power = 1;
    for (int i = 1; i <= e; ++i) {
      power *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> first_primes(std::size_t count) {
  const auto& table = small_primes();
  if (count > table.size()) throw DomainError("first_primes: request exceeds prime table");
  return {table.begin(), table.begin() + static_cast<std::ptrdiff_t>(count)};
}

std::uint64_t primorial(int m) {
  if (m < 0) throw DomainError("primorial: m must be non-negative");
  std::uint64_t q = 1;
  for (std::uint64_t p : first_primes(static_cast<std::size_t>(m))) {
    if (mul_overflows(q, p, q)) throw DomainError("primorial exceeds 64 bits (m > 15)");
  }
  return q;
}

BigCount binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (n < kPascalRows) return pascal_cache().get(static_cast<std::size_t>(n), static_cast<std::size_t>(k));
  BigCount out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigCount multichoose(std::int64_t l, std::int64_t m) {
  if (m == 0) return 1;
  return binomial(l + m - 1, m);
}

BigCount stirling2(int m, int k) {
  if (m < 0 || k < 0 || k > m) return 0;
  return stirling_cache().get(static_cast<std::size_t>(m), static_cast<std::size_t>(k));
}

BigCount factorial(int n) {
  if (n < 0) throw DomainError("factorial of negative integer");
  BigCount out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

BigCount ipow(std::int64_t base, unsigned exp) {
  BigCount out;
  const BigCount b(static_cast<long>(base));
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), exp);
  return out;
}

}  // namespace colorfact
