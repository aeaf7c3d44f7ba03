#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace colorfact {

/// A part of a colored factorization: value >= 2 carrying color 1..l.
struct ColoredPart {
  std::uint64_t value = 2;
  int color = 1;

  friend auto operator<=>(const ColoredPart&, const ColoredPart&) = default;
};

/// Unordered factorizations keep their parts sorted descending by
/// (value, color), which makes the vector a unique key for the multiset.
struct ColoredFactorization {
  std::vector<ColoredPart> parts;
  bool ordered = false;

  [[nodiscard]] std::uint64_t product() const;
  [[nodiscard]] int colors_used() const;
  friend bool operator==(const ColoredFactorization&, const ColoredFactorization&) = default;
};

/// Text form: parts as `value.color` joined by `*`; the empty factorization of 1 is `1`.
std::string to_string(const ColoredFactorization& f);
/// Inverse of `to_string`. Unordered input is re-sorted into canonical order.
ColoredFactorization parse_factorization(std::string_view text, bool ordered);

/// Default cap on the total number of parts an enumeration may emit.
inline constexpr std::uint64_t kDefaultGuard = 10'000'000;

/// Uncolored factorizations (every color 1) with parts in [2, max_part],
/// in descending lexicographic order.
std::vector<ColoredFactorization> enum_factorizations(std::uint64_t n, bool ordered, bool distinct,
                                                      std::uint64_t max_part);

struct EnumOptions {
  bool ordered = false;
  bool distinct = false;  // no repeated (value, color) pair
  bool exact = false;     // every one of the l colors must occur
  std::uint64_t guard = kDefaultGuard;
};

/// All l-colored factorizations of n matching the options, in descending
/// lexicographic order of their (value, color) sequences. Throws
/// ResourceError when the projected number of parts exceeds the guard.
std::vector<ColoredFactorization> enum_colored(std::uint64_t n, int l, const EnumOptions& options = {});

/// Unordered l-colored factorizations of n into primes.
std::vector<ColoredFactorization> enum_prime_colored(std::uint64_t n, int l, bool exact,
                                                     std::uint64_t guard = kDefaultGuard);

}  // namespace colorfact
