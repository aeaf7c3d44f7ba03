#include "colorfact/oracle.hpp"

#include <functional>
#include <string>

#include "colorfact/enumeration.hpp"
#include "colorfact/errors.hpp"

namespace colorfact {
namespace {

bool is_ordered(CountFamily f) {
  return f == CountFamily::OrderedA || f == CountFamily::OrderedB || f == CountFamily::OrderedExactA ||
         f == CountFamily::OrderedExactB;
}

bool is_distinct(CountFamily f) {
  return f == CountFamily::B || f == CountFamily::b || f == CountFamily::OrderedB || f == CountFamily::OrderedExactB;
}

bool is_exact(CountFamily f) {
  return f == CountFamily::a || f == CountFamily::b || f == CountFamily::OrderedExactA ||
         f == CountFamily::OrderedExactB;
}

BigCount signed_unit(std::size_t parts) { return parts % 2 == 0 ? BigCount(1) : BigCount(-1); }

// Ordered l-tuples of positive integers with product n, by brute force.
BigCount count_tuples(std::uint64_t n, int l) {
  if (l == 0) return n == 1 ? 1 : 0;
  BigCount total = 0;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d == 0) total += count_tuples(n / d, l - 1);
  }
  return total;
}

BigCount by_enumeration(std::uint64_t n, CountFamily family, int l, std::optional<int> k) {
  switch (family) {
    case CountFamily::MuF:
    case CountFamily::MuG: {
      BigCount total = 0;
      for (const auto& f : enum_factorizations(n, false, family == CountFamily::MuG, n)) {
        total += signed_unit(f.parts.size());
      }
      return total;
    }
    case CountFamily::Divisor:
      return count_tuples(n, l);
    case CountFamily::OrderedParts: {
      BigCount total = 0;
      for (const auto& f : enum_factorizations(n, true, false, n)) {
        if (static_cast<int>(f.parts.size()) == l) ++total;
      }
      return total;
    }
    default:
      break;
  }
  EnumOptions options;
  options.ordered = is_ordered(family);
  options.distinct = is_distinct(family);
  options.exact = is_exact(family);
  const auto lists = enum_colored(n, l, options);
  if (!k) return static_cast<unsigned long>(lists.size());
  BigCount total = 0;
  for (const auto& f : lists) {
    if (static_cast<int>(f.parts.size()) == *k) ++total;
  }
  return total;
}

// Colorings (with orderings where applicable) of one uncolored multiset
// using at most `colors` colors.
BigCount multiset_weight(const std::vector<int>& multiplicities, int parts, int colors, CountFamily family) {
  BigCount w = 1;
  for (int m : multiplicities) w *= is_distinct(family) ? binomial(colors, m) : multichoose(colors, m);
  if (!is_ordered(family)) return w;
  if (is_distinct(family)) return w * factorial(parts);
  BigCount arrangements = factorial(parts);
  for (int m : multiplicities) arrangements /= factorial(m);
  return arrangements * ipow(colors, static_cast<unsigned>(parts));
}

BigCount by_weights(std::uint64_t n, CountFamily family, int l, std::optional<int> k) {
  if (family == CountFamily::Divisor) {
    // Each prime's exponent is spread independently over l ordered slots.
    BigCount total = 1;
    const FactoredInteger fn = factorize(n);
    for (const auto& pp : fn.factors()) total *= binomial(pp.exponent + l - 1, l - 1);
    return total;
  }
  BigCount total = 0;
  for (const auto& f : enum_factorizations(n, false, false, n)) {
    std::vector<int> multiplicities;
    for (std::size_t i = 0; i < f.parts.size(); ++i) {
      if (i > 0 && f.parts[i].value == f.parts[i - 1].value) {
        ++multiplicities.back();
      } else {
        multiplicities.push_back(1);
      }
    }
    const int parts = static_cast<int>(f.parts.size());
    switch (family) {
      case CountFamily::MuF:
        total += signed_unit(f.parts.size());
        continue;
      case CountFamily::MuG:
        if (static_cast<std::size_t>(parts) == multiplicities.size()) total += signed_unit(f.parts.size());
        continue;
      case CountFamily::OrderedParts:
        if (parts == l) {
          BigCount arrangements = factorial(parts);
          for (int m : multiplicities) arrangements /= factorial(m);
          total += arrangements;
        }
        continue;
      default:
        break;
    }
    if (k && parts != *k) continue;
    if (!is_exact(family)) {
      total += multiset_weight(multiplicities, parts, l, family);
      continue;
    }
    // Inclusion-exclusion over which colors are allowed.
    for (int j = 1; j <= l; ++j) {
      const BigCount term = binomial(l, j) * multiset_weight(multiplicities, parts, j, family);
      if ((l - j) % 2 == 0) {
        total += term;
      } else {
        total -= term;
      }
    }
  }
  if (is_exact(family) && n == 1) return 0;
  return total;
}

}  // namespace

BigCount oracle_count(std::uint64_t n, CountFamily family, int l, std::optional<int> k, OracleMethod method) {
  if (n == 0) throw DomainError("oracle_count: n must be positive");
  if (n > kOracleMaxN || l > kOracleMaxL) {
    throw ResourceError("oracle guard: n <= " + std::to_string(kOracleMaxN) + " and l <= " +
                        std::to_string(kOracleMaxL));
  }
  const bool moebius = family == CountFamily::MuF || family == CountFamily::MuG;
  if (!moebius && l < 1) throw DomainError("oracle_count: l must be >= 1");
  if (k && family != CountFamily::A && family != CountFamily::B) {
    throw UsageError("oracle_count: k is only supported for A and B");
  }
  return method == OracleMethod::Enumeration ? by_enumeration(n, family, l, k) : by_weights(n, family, l, k);
}

}  // namespace colorfact
