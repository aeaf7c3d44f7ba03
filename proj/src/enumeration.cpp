#include "colorfact/enumeration.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <set>

#include "colorfact/arith.hpp"
#include "colorfact/errors.hpp"

namespace colorfact {
namespace {

bool descending(const ColoredFactorization& lhs, const ColoredFactorization& rhs) {
  return std::lexicographical_compare(rhs.parts.begin(), rhs.parts.end(), lhs.parts.begin(), lhs.parts.end());
}

struct Group {
  std::uint64_t value;
  int multiplicity;
};

std::vector<Group> group_values(const ColoredFactorization& uncolored) {
  std::vector<Group> groups;
  for (const auto& part : uncolored.parts) {
    if (!groups.empty() && groups.back().value == part.value) {
      ++groups.back().multiplicity;
    } else {
      groups.push_back({part.value, 1});
    }
  }
  return groups;
}

// Color sequences of length m, descending; strictly descending if distinct.
std::vector<std::vector<int>> color_choices(int m, int l, bool distinct) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(int)> extend = [&](int max_color) {
    if (static_cast<int>(current.size()) == m) {
      out.push_back(current);
      return;
    }
    for (int c = max_color; c >= 1; --c) {
      current.push_back(c);
      extend(distinct ? c - 1 : c);
      current.pop_back();
    }
  };
  extend(l);
  return out;
}

void check_guard(const BigCount& lists, const BigCount& parts, std::uint64_t guard) {
  if (parts > BigCount(static_cast<unsigned long>(guard))) {
    throw ResourceError("enumeration would produce " + lists.get_str() + " factorizations (" + parts.get_str() +
                        " parts), above the guard of " + std::to_string(guard));
  }
}

// Number of colorings (and orderings, if requested) of one uncolored multiset.
BigCount projected_size(const std::vector<Group>& groups, int parts, int l, const EnumOptions& options) {
  BigCount count = 1;
  for (const auto& g : groups) {
    count *= options.distinct ? binomial(l, g.multiplicity) : multichoose(l, g.multiplicity);
  }
  if (!options.ordered) return count;
  if (options.distinct) return count * factorial(parts);
  // Ordered with repetition: every arrangement of the values, times l^k colorings.
  BigCount arrangements = factorial(parts);
  for (const auto& g : groups) arrangements /= factorial(g.multiplicity);
  return arrangements * ipow(l, static_cast<unsigned>(parts));
}

template <class Emit>
void decorate(const std::vector<Group>& groups, int l, bool distinct, Emit&& emit) {
  std::vector<std::vector<std::vector<int>>> choices;
  choices.reserve(groups.size());
  for (const auto& g : groups) {
    choices.push_back(color_choices(g.multiplicity, l, distinct));
    if (choices.back().empty()) return;
  }
  std::vector<std::size_t> pick(groups.size(), 0);
  while (true) {
    ColoredFactorization f;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      for (int c : choices[i][pick[i]]) f.parts.push_back({groups[i].value, c});
    }
    emit(std::move(f));
    std::size_t i = groups.size();
    while (i > 0) {
      --i;
      if (++pick[i] < choices[i].size()) break;
      pick[i] = 0;
      if (i == 0) return;
    }
    if (groups.empty()) return;
  }
}

}  // namespace

std::uint64_t ColoredFactorization::product() const {
  std::uint64_t p = 1;
  for (const auto& part : parts) p *= part.value;
  return p;
}

int ColoredFactorization::colors_used() const {
  std::set<int> colors;
  for (const auto& part : parts) colors.insert(part.color);
  return static_cast<int>(colors.size());
}

std::string to_string(const ColoredFactorization& f) {
  if (f.parts.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < f.parts.size(); ++i) {
    if (i > 0) out += '*';
    out += std::to_string(f.parts[i].value);
    out += '.';
    out += std::to_string(f.parts[i].color);
  }
  return out;
}

ColoredFactorization parse_factorization(std::string_view text, bool ordered) {
  ColoredFactorization f;
  f.ordered = ordered;
  if (text == "1") return f;
  auto parse_number = [&](std::string_view token, auto& out) {
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw UsageError("malformed factorization: " + std::string(text));
    }
  };
  while (!text.empty()) {
    const auto star = text.find('*');
    const std::string_view token = text.substr(0, star);
    const auto dot = token.find('.');
    if (dot == std::string_view::npos) throw UsageError("malformed factorization part: " + std::string(token));
    ColoredPart part;
    parse_number(token.substr(0, dot), part.value);
    parse_number(token.substr(dot + 1), part.color);
    if (part.value < 2 || part.color < 1) throw UsageError("factorization part out of range: " + std::string(token));
    f.parts.push_back(part);
    text = star == std::string_view::npos ? std::string_view{} : text.substr(star + 1);
  }
  if (!ordered) std::sort(f.parts.begin(), f.parts.end(), std::greater<>());
  return f;
}

std::vector<ColoredFactorization> enum_factorizations(std::uint64_t n, bool ordered, bool distinct,
                                                      std::uint64_t max_part) {
  if (n == 0) throw DomainError("enum_factorizations: n must be positive");
  std::vector<std::uint64_t> divs = divisors(factorize(n));
  std::reverse(divs.begin(), divs.end());
  std::vector<ColoredFactorization> out;
  std::vector<ColoredPart> current;
  std::function<void(std::uint64_t, std::uint64_t)> recurse = [&](std::uint64_t rest, std::uint64_t bound) {
    if (rest == 1) {
      out.push_back({current, ordered});
      return;
    }
    for (std::uint64_t d : divs) {
      if (d > bound || d > rest || d < 2 || rest % d != 0) continue;
      if (ordered && distinct &&
          std::any_of(current.begin(), current.end(), [d](const ColoredPart& p) { return p.value == d; })) {
        continue;
      }
      current.push_back({d, 1});
      const std::uint64_t next = ordered ? max_part : (distinct ? d - 1 : d);
      recurse(rest / d, next);
      current.pop_back();
    }
  };
  recurse(n, max_part);
  return out;
}

std::vector<ColoredFactorization> enum_colored(std::uint64_t n, int l, const EnumOptions& options) {
  if (l < 1) throw DomainError("enum_colored: l must be >= 1");
  const auto multisets = enum_factorizations(n, false, false, n);

  BigCount lists = 0;
  BigCount parts = 0;
  for (const auto& m : multisets) {
    const auto size = projected_size(group_values(m), static_cast<int>(m.parts.size()), l, options);
    lists += size;
    parts += size * static_cast<unsigned long>(m.parts.size());
  }
  check_guard(lists, parts, options.guard);

  std::vector<ColoredFactorization> out;
  for (const auto& m : multisets) {
    decorate(group_values(m), l, options.distinct, [&](ColoredFactorization f) {
      if (options.exact && f.colors_used() != l) return;
      if (!options.ordered) {
        out.push_back(std::move(f));
        return;
      }
      f.ordered = true;
      // Parts start sorted descending: prev_permutation walks every distinct order.
      do {
        out.push_back(f);
      } while (std::prev_permutation(f.parts.begin(), f.parts.end()));
    });
  }
  std::sort(out.begin(), out.end(), descending);
  return out;
}

std::vector<ColoredFactorization> enum_prime_colored(std::uint64_t n, int l, bool exact, std::uint64_t guard) {
  if (l < 1) throw DomainError("enum_prime_colored: l must be >= 1");
  const FactoredInteger f = factorize(n);
  std::vector<Group> groups;
  BigCount lists = 1;
  for (auto it = f.factors().rbegin(); it != f.factors().rend(); ++it) {
    groups.push_back({it->prime, it->exponent});
    lists *= multichoose(l, it->exponent);
  }
  check_guard(lists, lists * static_cast<unsigned long>(f.big_omega()), guard);
  std::vector<ColoredFactorization> out;
  decorate(groups, l, false, [&](ColoredFactorization c) {
    if (!exact || c.colors_used() == l) out.push_back(std::move(c));
  });
  std::sort(out.begin(), out.end(), descending);
  return out;
}

}  // namespace colorfact
