#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "colorfact/dirichlet.hpp"

namespace colorfact::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20261016);
  return engine;
}

inline std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng());
}

// Random sequence with small signed entries; a(1) forced to `lead` if given.
inline ArithSeq random_seq(std::size_t limit, long lo = -5, long hi = 5) {
  std::uniform_int_distribution<long> dist(lo, hi);
  std::vector<BigCount> v(limit);
  for (auto& x : v) x = dist(rng());
  return ArithSeq(limit, std::move(v));
}

inline ArithSeq random_unit_seq(std::size_t limit) {
  ArithSeq a = random_seq(limit);
  a(1) = 1;
  return a;
}

}  // namespace colorfact::testing
