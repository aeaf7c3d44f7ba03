#include "colorfact/counting.hpp"

#include <map>
#include <string>
#include <tuple>

#include "colorfact/errors.hpp"
#include "lattice.hpp"

namespace colorfact {
namespace {

using detail::ExponentLattice;

// Memoized largest-part recursion over the divisors of a fixed n.
class UncoloredCounter {
 public:
  UncoloredCounter(std::uint64_t n, PartRule rule) : divisors_(divisors(factorize(n))), rule_(rule) {}

  // k < 0 means any number of parts.
  BigCount count(std::uint64_t n, std::uint64_t max_part, int k) {
    if (n == 1) return k <= 0 ? 1 : 0;
    if (k == 0) return 0;
    max_part = std::min(max_part, n);
    const auto key = std::make_tuple(n, max_part, k);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    BigCount total = 0;
    for (std::uint64_t d : divisors_) {
      if (d > max_part) break;
      if (d < 2 || n % d != 0) continue;
      const std::uint64_t next_max = rule_ == PartRule::Distinct ? d - 1 : d;
      total += count(n / d, next_max, k < 0 ? -1 : k - 1);
    }
    memo_.emplace(key, total);
    return total;
  }

 private:
  std::vector<std::uint64_t> divisors_;
  PartRule rule_;
  std::map<std::tuple<std::uint64_t, std::uint64_t, int>, BigCount> memo_;
};

void require_positive_l(int l, const char* what) {
  if (l < 1) throw DomainError(std::string(what) + ": l must be >= 1");
}

// Canonical integer for the dense Dirichlet route, guarded.
std::size_t dense_limit_for(const FactoredInteger& n) {
  const std::uint64_t canonical = canonical_representative(n.signature()).value();
  if (canonical > kDenseLimit) {
    throw ResourceError("Dirichlet route would expand " + std::to_string(canonical) +
                        " terms (limit " + std::to_string(kDenseLimit) + "); use the recursion");
  }
  return static_cast<std::size_t>(canonical);
}

void check_exact(const BigCount& numerator, int divisor, RecursionTrace* trace) {
  if (!mpz_divisible_ui_p(numerator.get_mpz_t(), static_cast<unsigned long>(divisor))) {
    throw ConsistencyError("per-prime recursion: inexact division of " + numerator.get_str() + " by " +
                           std::to_string(divisor));
  }
  if (trace != nullptr) ++trace->exact_divisions;
}

BigCount exact_quotient(const BigCount& numerator, int divisor) {
  BigCount out;
  mpz_divexact_ui(out.get_mpz_t(), numerator.get_mpz_t(), static_cast<unsigned long>(divisor));
  return out;
}

PartRule rule_of(CountFamily family) {
  switch (family) {
    case CountFamily::B:
    case CountFamily::b:
    case CountFamily::OrderedB:
    case CountFamily::OrderedExactB:
      return PartRule::Distinct;
    default:
      return PartRule::Repeated;
  }
}

}  // namespace

BigCount count_unordered(std::uint64_t n, std::uint64_t max_part) {
  if (n == 0) throw DomainError("count_unordered: n must be positive");
  return UncoloredCounter(n, PartRule::Repeated).count(n, max_part, -1);
}

BigCount count_unordered(std::uint64_t n) { return count_unordered(n, n); }

BigCount count_distinct(std::uint64_t n, std::uint64_t max_part) {
  if (n == 0) throw DomainError("count_distinct: n must be positive");
  return UncoloredCounter(n, PartRule::Distinct).count(n, max_part, -1);
}

BigCount count_distinct(std::uint64_t n) { return count_distinct(n, n); }

BigCount count_by_parts(std::uint64_t n, int k, PartRule rule) {
  if (n == 0) throw DomainError("count_by_parts: n must be positive");
  if (k < 0) throw DomainError("count_by_parts: k must be non-negative");
  return UncoloredCounter(n, rule).count(n, n, k);
}

BigCount colored_atmost_recursive(const std::vector<int>& exponents, int l, PartRule rule, RecursionTrace* trace) {
  if (l == 0) throw DomainError("recursion: l must be non-zero");
  const ExponentLattice lattice(exponents);
  std::vector<BigCount> value(lattice.size());
  value[0] = 1;
  for (std::size_t m = 1; m < lattice.size(); ++m) {
    const std::size_t j = lattice.pivot(m);
    BigCount sum = 0;
    lattice.for_each_divisor(m, [&](std::size_t d) {
      const int weight = lattice.exponent(d, j);
      if (weight == 0) return;
      for (int i = 1; lattice.power_divides(d, i, m); ++i) {
        const std::size_t q = m - static_cast<std::size_t>(i) * d;
        if (rule == PartRule::Distinct && i % 2 == 0) {
          sum -= value[q] * weight;
        } else {
          sum += value[q] * weight;
        }
      }
    });
    const BigCount numerator = sum * l;
    const int e = lattice.exponent(m, j);
    check_exact(numerator, e, trace);
    value[m] = exact_quotient(numerator, e);
  }
  return value[lattice.top()];
}

std::vector<BigCount> colored_by_parts_recursive(const std::vector<int>& exponents, int l, PartRule rule,
                                                 RecursionTrace* trace) {
  if (l == 0) throw DomainError("recursion: l must be non-zero");
  const ExponentLattice lattice(exponents);
  std::vector<std::vector<BigCount>> value(lattice.size());
  value[0] = {BigCount(1)};
  for (std::size_t m = 1; m < lattice.size(); ++m) {
    const std::size_t j = lattice.pivot(m);
    const auto parts = static_cast<std::size_t>(lattice.big_omega(m));
    std::vector<BigCount> sum(parts + 1, BigCount(0));
    lattice.for_each_divisor(m, [&](std::size_t d) {
      const int weight = lattice.exponent(d, j);
      if (weight == 0) return;
      for (int i = 1; lattice.power_divides(d, i, m); ++i) {
        const std::size_t q = m - static_cast<std::size_t>(i) * d;
        const bool negative = rule == PartRule::Distinct && i % 2 == 0;
        const auto& sub = value[q];
        for (std::size_t k = static_cast<std::size_t>(i); k <= parts && k - i < sub.size(); ++k) {
          if (negative) {
            sum[k] -= sub[k - i] * weight;
          } else {
            sum[k] += sub[k - i] * weight;
          }
        }
      }
    });
    const int e = lattice.exponent(m, j);
    auto& row = value[m];
    row.assign(parts + 1, BigCount(0));
    for (std::size_t k = 1; k <= parts; ++k) {
      const BigCount numerator = sum[k] * l;
      check_exact(numerator, e, trace);
      row[k] = exact_quotient(numerator, e);
    }
  }
  return value[lattice.top()];
}

BigCount ordered_colored_recursive(const std::vector<int>& exponents, int l) {
  require_positive_l(l, "ordered_colored");
  const ExponentLattice lattice(exponents);
  std::vector<BigCount> value(lattice.size());
  value[0] = 1;
  for (std::size_t m = 1; m < lattice.size(); ++m) {
    BigCount sum = 0;
    lattice.for_each_divisor(m, [&](std::size_t d) {
      if (d != m) sum += value[d];
    });
    value[m] = sum * l;
  }
  return value[lattice.top()];
}

ArithSeq unordered_sequence(std::size_t limit, PartRule rule) {
  ArithSeq a = ArithSeq::identity(limit);
  for (std::size_t m = 2; m <= limit; ++m) {
    if (rule == PartRule::Repeated) {
      for (std::size_t n = m; n <= limit; n += m) a(n) += a(n / m);
    } else {
      for (std::size_t n = (limit / m) * m; n >= m; n -= m) a(n) += a(n / m);
    }
  }
  return a;
}

BivariateTable unordered_parts_table(std::size_t limit, PartRule rule) {
  BivariateTable t = BivariateTable::identity(limit);
  auto absorb = [&](std::size_t n, std::size_t m) {
    const std::vector<BigCount> source = t.row(n / m);
    for (std::size_t k = 0; k < source.size(); ++k) {
      if (sgn(source[k]) != 0) t.ref(n, k + 1) += source[k];
    }
  };
  for (std::size_t m = 2; m <= limit; ++m) {
    if (rule == PartRule::Repeated) {
      for (std::size_t n = m; n <= limit; n += m) absorb(n, m);
    } else {
      for (std::size_t n = (limit / m) * m; n >= m; n -= m) absorb(n, m);
    }
  }
  return t;
}

ArithSeq unordered_sequence_bar(std::size_t limit, PartRule rule) {
  ArithSeq a = unordered_sequence(limit, rule);
  a(1) = 0;
  return a;
}

ArithSeq ordered_coefficients(std::size_t limit, int l) {
  ArithSeq c = ArithSeq::constant(limit, BigCount(-l));
  c(1) = 1;
  return c;
}

BigCount colored_atmost(const FactoredInteger& n, int l, PartRule rule, Method method) {
  switch (method) {
    case Method::Default:
    case Method::Recursion:
      if (l == 0 || l < -1) throw DomainError("colored_atmost: l must be >= 1 or exactly -1");
      return colored_atmost_recursive(n.exponents(), l, rule);
    case Method::Dirichlet: {
      require_positive_l(l, "colored_atmost (dirichlet)");
      const std::size_t limit = dense_limit_for(n);
      return power(unordered_sequence(limit, rule), static_cast<unsigned>(l))(limit);
    }
    case Method::Closed:
      require_positive_l(l, "colored_atmost (closed)");
      if (!n.squarefree()) throw UsageError("closed form for A_l/B_l requires squarefree n");
      if (n.value() == 1) return 1;
      return squarefree_closed_form(n.omega(), l);
  }
  throw UsageError("colored_atmost: unknown method");
}

BigCount colored_by_parts(const FactoredInteger& n, int k, int l, PartRule rule, Method method) {
  require_positive_l(l, "colored_by_parts");
  if (k < 0) throw DomainError("colored_by_parts: k must be non-negative");
  switch (method) {
    case Method::Default:
    case Method::Recursion: {
      const auto row = colored_by_parts_recursive(n.exponents(), l, rule);
      return static_cast<std::size_t>(k) < row.size() ? row[static_cast<std::size_t>(k)] : BigCount(0);
    }
    case Method::Dirichlet: {
      const std::size_t limit = dense_limit_for(n);
      return power(unordered_parts_table(limit, rule), static_cast<unsigned>(l)).at(limit, static_cast<std::size_t>(k));
    }
    case Method::Closed:
      break;
  }
  throw UsageError("colored_by_parts supports the recursion and dirichlet methods");
}

BigCount colored_exact(const FactoredInteger& n, int l, CountFamily family, Method method) {
  require_positive_l(l, "colored_exact");
  const bool unordered = family == CountFamily::a || family == CountFamily::b;
  if (!unordered && family != CountFamily::OrderedExactA && family != CountFamily::OrderedExactB) {
    throw UsageError("colored_exact: family must be a, b, at or bt");
  }
  if (n.value() == 1) return 0;
  const PartRule rule = rule_of(family);
  if (unordered && method == Method::Dirichlet) {
    const std::size_t limit = dense_limit_for(n);
    return power(unordered_sequence_bar(limit, rule), static_cast<unsigned>(l))(limit);
  }
  // phi_l = sum_{i=1}^{l} (-1)^{l-i} C(l, i) Phi_i; Phi_0(n) = 0 for n >= 2.
  BigCount total = 0;
  for (int i = 1; i <= l; ++i) {
    BigCount at_most;
    if (unordered) {
      at_most = colored_atmost(n, i, rule, method);
    } else if (family == CountFamily::OrderedExactA) {
      at_most = ordered_colored(n, i, method);
    } else {
      at_most = ordered_distinct_colored(n, i, method);
    }
    const BigCount term = binomial(l, i) * at_most;
    if ((l - i) % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

BigCount ordered_exact_parts(const FactoredInteger& n, int k) {
  if (k < 0) throw DomainError("ordered_exact_parts: k must be non-negative");
  if (k == 0) return n.value() == 1 ? 1 : 0;
  if (n.value() == 1) return 0;
  BigCount total = 0;
  for (int i = 0; i < k; ++i) {
    BigCount product = 1;
    for (const auto& pp : n.factors()) product *= binomial(pp.exponent + k - i - 1, pp.exponent);
    product *= binomial(k, i);
    if (i % 2 == 0) {
      total += product;
    } else {
      total -= product;
    }
  }
  return total;
}

BigCount ordered_colored(const FactoredInteger& n, int l, Method method) {
  require_positive_l(l, "ordered_colored");
  if (n.value() == 1) return 1;
  switch (method) {
    case Method::Default:
    case Method::Closed: {
      BigCount total = 0;
      const int parts = n.big_omega();
      for (int k = 1; k <= parts; ++k) total += ipow(l, static_cast<unsigned>(k)) * ordered_exact_parts(n, k);
      return total;
    }
    case Method::Dirichlet: {
      const std::size_t limit = dense_limit_for(n);
      return inverse(ordered_coefficients(limit, l))(limit);
    }
    case Method::Recursion:
      return ordered_colored_recursive(n.exponents(), l);
  }
  throw UsageError("ordered_colored: unknown method");
}

BigCount ordered_distinct_colored(const FactoredInteger& n, int l, Method method) {
  require_positive_l(l, "ordered_distinct_colored");
  if (n.value() == 1) return 1;
  std::vector<BigCount> parts;
  switch (method) {
    case Method::Default:
    case Method::Recursion:
      parts = colored_by_parts_recursive(n.exponents(), l, PartRule::Distinct);
      break;
    case Method::Dirichlet: {
      const std::size_t limit = dense_limit_for(n);
      parts = power(unordered_parts_table(limit, PartRule::Distinct), static_cast<unsigned>(l)).row(limit);
      break;
    }
    case Method::Closed:
      if (!n.squarefree()) throw UsageError("closed form for B~_l requires squarefree n");
      return primorial_ordered_closed_form(n.omega(), l);
  }
  BigCount total = 0;
  for (std::size_t k = 1; k < parts.size(); ++k) total += factorial(static_cast<int>(k)) * parts[k];
  return total;
}

BigCount generalized_moebius(const FactoredInteger& n, CountFamily which, Method method) {
  if (which != CountFamily::MuF && which != CountFamily::MuG) {
    throw UsageError("generalized_moebius: family must be muf or mug");
  }
  // mu_f has Dirichlet series 1 / (g's series), mu_g has 1 / (f's series).
  const PartRule rule = which == CountFamily::MuF ? PartRule::Distinct : PartRule::Repeated;
  switch (method) {
    case Method::Default:
    case Method::Recursion:
      return colored_atmost_recursive(n.exponents(), -1, rule);
    case Method::Dirichlet: {
      const std::size_t limit = dense_limit_for(n);
      return inverse(unordered_sequence(limit, rule))(limit);
    }
    case Method::Closed:
      break;
  }
  throw UsageError("generalized_moebius supports the recursion and dirichlet methods");
}

BigCount moebius_by_parts(const FactoredInteger& n, CountFamily which) {
  if (which != CountFamily::MuF && which != CountFamily::MuG) {
    throw UsageError("moebius_by_parts: family must be muf or mug");
  }
  const PartRule rule = which == CountFamily::MuF ? PartRule::Repeated : PartRule::Distinct;
  BigCount total = 0;
  for (int k = 0; k <= n.big_omega(); ++k) {
    const BigCount c = count_by_parts(n.value(), k, rule);
    if (k % 2 == 0) {
      total += c;
    } else {
      total -= c;
    }
  }
  return total;
}

BigCount squarefree_closed_form(int m, int l) {
  if (m < 1) throw DomainError("squarefree_closed_form: m must be >= 1");
  require_positive_l(l, "squarefree_closed_form");
  BigCount total = 0;
  for (int k = 1; k <= m; ++k) total += ipow(l, static_cast<unsigned>(k)) * stirling2(m, k);
  return total;
}

BigCount primorial_ordered_closed_form(int m, int l) {
  if (m < 1) throw DomainError("primorial_ordered_closed_form: m must be >= 1");
  require_positive_l(l, "primorial_ordered_closed_form");
  BigCount total = 0;
  for (int k = 1; k <= m; ++k) total += ipow(l, static_cast<unsigned>(k)) * factorial(k) * stirling2(m, k);
  return total;
}

BigCount divisor_like(const FactoredInteger& n, int l, CountFamily kind, Method method) {
  require_positive_l(l, "divisor_like");
  if (kind == CountFamily::Divisor) {
    if (method == Method::Default || method == Method::Dirichlet) {
      const std::size_t limit = dense_limit_for(n);
      return power(ArithSeq::constant(limit, BigCount(1)), static_cast<unsigned>(l))(limit);
    }
    if (method == Method::Closed) {
      BigCount total = 1;
      for (const auto& pp : n.factors()) total *= binomial(pp.exponent + l - 1, l - 1);
      return total;
    }
    throw UsageError("d_l supports the dirichlet and closed methods");
  }
  if (kind == CountFamily::OrderedParts) {
    if (method == Method::Default || method == Method::Closed) return ordered_exact_parts(n, l);
    if (method == Method::Dirichlet) {
      const std::size_t limit = dense_limit_for(n);
      ArithSeq shifted = ArithSeq::constant(limit, BigCount(1));
      shifted(1) = 0;
      return power(shifted, static_cast<unsigned>(l))(limit);
    }
    throw UsageError("f_l supports the closed and dirichlet methods");
  }
  throw UsageError("divisor_like: family must be dl or fl");
}

void validate(const CountQuery& query) {
  const bool has_parts = query.family == CountFamily::A || query.family == CountFamily::B;
  if (query.k && !has_parts) throw UsageError("a part count k is only supported for families A and B");
  if (query.k && *query.k < 0) throw DomainError("k must be non-negative");
  switch (query.family) {
    case CountFamily::MuF:
    case CountFamily::MuG:
      return;
    case CountFamily::A:
    case CountFamily::B:
      if (query.l == -1 && !query.k &&
          (query.method == Method::Default || query.method == Method::Recursion)) {
        return;
      }
      break;
    default:
      break;
  }
  if (query.l < 1) throw DomainError("l must be >= 1 (l = -1 only for A/B through the recursion)");
}

BigCount compute_direct(const CountQuery& query, const FactoredInteger& n) {
  validate(query);
  switch (query.family) {
    case CountFamily::A:
    case CountFamily::B:
      if (query.k) return colored_by_parts(n, *query.k, query.l, rule_of(query.family), query.method);
      return colored_atmost(n, query.l, rule_of(query.family), query.method);
    case CountFamily::a:
    case CountFamily::b:
    case CountFamily::OrderedExactA:
    case CountFamily::OrderedExactB:
      return colored_exact(n, query.l, query.family, query.method);
    case CountFamily::OrderedA:
      return ordered_colored(n, query.l, query.method);
    case CountFamily::OrderedB:
      return ordered_distinct_colored(n, query.l, query.method);
    case CountFamily::MuF:
    case CountFamily::MuG:
      return generalized_moebius(n, query.family, query.method);
    case CountFamily::Divisor:
    case CountFamily::OrderedParts:
      return divisor_like(n, query.l, query.family, query.method);
  }
  throw UsageError("unsupported family");
}

SignatureCache& default_cache() {
  static SignatureCache cache;
  return cache;
}

BigCount evaluate(const CountQuery& query, const FactoredInteger& n) {
  validate(query);
  CountQuery key = query;
  if (key.family == CountFamily::MuF || key.family == CountFamily::MuG) key.l = -1;
  return eval_by_signature(default_cache(), key, n, compute_direct);
}

BigCount evaluate(const CountQuery& query, std::uint64_t n) { return evaluate(query, factorize(n)); }

ArithSeq sequence(const CountQuery& query, std::size_t limit) {
  validate(query);
  const PartRule rule = rule_of(query.family);
  const auto l = static_cast<unsigned>(std::max(query.l, 0));
  if (query.method == Method::Dirichlet) {
    switch (query.family) {
      case CountFamily::A:
      case CountFamily::B:
        if (query.k) {
          const auto table = power(unordered_parts_table(limit, rule), l);
          ArithSeq out(limit);
          for (std::size_t n = 1; n <= limit; ++n) out(n) = table.at(n, static_cast<std::size_t>(*query.k));
          return out;
        }
        return power(unordered_sequence(limit, rule), l);
      case CountFamily::a:
      case CountFamily::b:
        return power(unordered_sequence_bar(limit, rule), l);
      case CountFamily::OrderedA:
        return inverse(ordered_coefficients(limit, query.l));
      case CountFamily::MuF:
        return inverse(unordered_sequence(limit, PartRule::Distinct));
      case CountFamily::MuG:
        return inverse(unordered_sequence(limit, PartRule::Repeated));
      default:
        break;
    }
  }
  if (query.family == CountFamily::Divisor && (query.method == Method::Default || query.method == Method::Dirichlet)) {
    return power(ArithSeq::constant(limit, BigCount(1)), l);
  }
  if (query.family == CountFamily::OrderedParts && query.method == Method::Dirichlet) {
    ArithSeq shifted = ArithSeq::constant(limit, BigCount(1));
    shifted(1) = 0;
    return power(shifted, l);
  }
  ArithSeq out(limit);
  for (std::size_t n = 1; n <= limit; ++n) out(n) = evaluate(query, factorize(n));
  return out;
}

}  // namespace colorfact
