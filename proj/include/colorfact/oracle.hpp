#pragma once

#include <cstdint>
#include <optional>

#include "colorfact/arith.hpp"
#include "colorfact/family.hpp"

namespace colorfact {

/// How the oracle counts.
///  Enumeration: size of an explicit list (with filters).
///  Weights: sum of per-multiset color/order weights over uncolored
///  factorizations, using only elementary combinatorics.
enum class OracleMethod { Enumeration, Weights };

inline constexpr std::uint64_t kOracleMaxN = 10'000;
inline constexpr int kOracleMaxL = 4;

/// Brute-force count independent of the counting module. `k` selects the
/// part-count refinement for A and B; OrderedParts reads its part count from l.
/// Throws ResourceError when n > 10^4 or l > 4.
BigCount oracle_count(std::uint64_t n, CountFamily family, int l, std::optional<int> k = std::nullopt,
                      OracleMethod method = OracleMethod::Enumeration);

}  // namespace colorfact
