#pragma once

#include <cstdint>
#include <vector>

#include "colorfact/arith.hpp"
#include "colorfact/dirichlet.hpp"
#include "colorfact/family.hpp"

namespace colorfact {

/// Whether a factorization may repeat a part.
enum class PartRule { Repeated, Distinct };

// Uncolored counts ----------------------------------------------------------

/// Multisets of integers in [2, max_part] with product n (f(n) when max_part >= n).
BigCount count_unordered(std::uint64_t n, std::uint64_t max_part);
BigCount count_unordered(std::uint64_t n);
/// Sets of integers in [2, max_part] with product n (g(n) when max_part >= n).
BigCount count_distinct(std::uint64_t n, std::uint64_t max_part);
BigCount count_distinct(std::uint64_t n);
/// f_k(n) or g_k(n): uncolored unordered factorizations into exactly k parts.
BigCount count_by_parts(std::uint64_t n, int k, PartRule rule);

// Per-prime recursions -------------------------------------------------------
//
// The log-weighted recursions for A_l, B_l, f_{k,l}, g_{k,l} hold coefficient-wise
// for every prime, because the logarithms of distinct primes are linearly
// independent over Q. Choosing the prime of largest exponent e as the pivot gives
//   e * A_l(n) = l * sum_{d >= 2, i >= 1, d^i | n} A_l(n / d^i) * e_pivot(d)
// (with sign (-1)^(i+1) for the distinct family). The division by e must be exact.

/// Counts exact divisions performed by the recursions.
struct RecursionTrace {
  std::size_t exact_divisions = 0;
};

/// A_l or B_l at the integer with the given exponent vector. Valid for every
/// l != 0 (l = -1 gives the generalized Moebius functions mu_g / mu_f).
BigCount colored_atmost_recursive(const std::vector<int>& exponents, int l, PartRule rule,
                                  RecursionTrace* trace = nullptr);
/// f_{k,l}(n) or g_{k,l}(n) for k = 0..Omega(n).
std::vector<BigCount> colored_by_parts_recursive(const std::vector<int>& exponents, int l, PartRule rule,
                                                 RecursionTrace* trace = nullptr);
/// Ordered colored count by the divisor-sum relation A~_l(n) = l * sum_{d|n, d<n} A~_l(d).
BigCount ordered_colored_recursive(const std::vector<int>& exponents, int l);

// Dense sequences (Dirichlet algebra route) ---------------------------------

/// f or g on 1..N by expanding prod_{m>=2} (1 - m^-s)^-1 resp. (1 + m^-s).
ArithSeq unordered_sequence(std::size_t limit, PartRule rule);
/// f_k(n) or g_k(n) on 1..N as a polynomial in z.
BivariateTable unordered_parts_table(std::size_t limit, PartRule rule);
/// f(n) or g(n) with the n = 1 term removed.
ArithSeq unordered_sequence_bar(std::size_t limit, PartRule rule);
/// c_l = (1, -l, -l, ...), whose Dirichlet inverse is A~_l.
ArithSeq ordered_coefficients(std::size_t limit, int l);

// Colored counts -------------------------------------------------------------

/// A_l(n) (Repeated) or B_l(n) (Distinct).
/// Methods: Recursion (default, any l != 0 with l >= -1), Dirichlet (l >= 1),
/// Closed (squarefree n only).
BigCount colored_atmost(const FactoredInteger& n, int l, PartRule rule, Method method = Method::Default);

/// f_{k,l}(n) or g_{k,l}(n). Methods: Recursion (default) or Dirichlet.
BigCount colored_by_parts(const FactoredInteger& n, int k, int l, PartRule rule, Method method = Method::Default);

/// Exactly-l-colors counts a, b, a~, b~ as the signed binomial transform of
/// the at-most counts. For a and b, Method::Dirichlet instead takes the l-th
/// Dirichlet power of f-bar / g-bar. Zero at n = 1.
BigCount colored_exact(const FactoredInteger& n, int l, CountFamily family, Method method = Method::Default);

/// Ordered factorizations into exactly k parts >= 2, by the alternating
/// binomial formula over the exponents.
BigCount ordered_exact_parts(const FactoredInteger& n, int k);

/// A~_l(n). Closed (default): sum_k l^k f~_k(n). Dirichlet: inverse of c_l.
/// Recursion: divisor-sum relation.
BigCount ordered_colored(const FactoredInteger& n, int l, Method method = Method::Default);

/// B~_l(n) = sum_k k! g_{k,l}(n). Method picks the route for g_{k,l};
/// Closed is accepted for squarefree n.
BigCount ordered_distinct_colored(const FactoredInteger& n, int l, Method method = Method::Default);

/// mu_f (family MuF) or mu_g (family MuG). Recursion (default) runs the l = -1
/// recursion; Dirichlet inverts g resp. f.
BigCount generalized_moebius(const FactoredInteger& n, CountFamily which, Method method = Method::Default);
/// Same values as alternating part-count sums sum_k (-1)^k f_k(n) resp. g_k(n).
BigCount moebius_by_parts(const FactoredInteger& n, CountFamily which);

/// sum_{k=1}^m l^k S(m, k): A_l = B_l at any squarefree n with m prime factors.
BigCount squarefree_closed_form(int m, int l);
/// sum_{k=1}^m l^k k! S(m, k): A~_l = B~_l at any squarefree n with m prime factors.
BigCount primorial_ordered_closed_form(int m, int l);

/// d_l(n) (family Divisor) or f~_l(n) (family OrderedParts).
/// Divisor: Dirichlet power of the all-ones sequence (default) or Closed
/// product of binomials. OrderedParts: Closed formula (default) or Dirichlet
/// power of (0, 1, 1, ...).
BigCount divisor_like(const FactoredInteger& n, int l, CountFamily kind, Method method = Method::Default);

// Dispatch -------------------------------------------------------------------

/// Evaluates a query at n without caching.
BigCount compute_direct(const CountQuery& query, const FactoredInteger& n);

/// Process-wide signature cache used by `evaluate`.
SignatureCache& default_cache();

/// Evaluates a query at n through the signature cache.
BigCount evaluate(const CountQuery& query, const FactoredInteger& n);
BigCount evaluate(const CountQuery& query, std::uint64_t n);

/// Values a(1..N). Uses one dense Dirichlet computation where the method
/// allows it and falls back to cached pointwise evaluation otherwise.
ArithSeq sequence(const CountQuery& query, std::size_t limit);

/// Throws UsageError/DomainError if the query is malformed.
void validate(const CountQuery& query);

/// Largest canonical integer the pointwise Dirichlet route will expand densely.
inline constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 21;

}  // namespace colorfact
