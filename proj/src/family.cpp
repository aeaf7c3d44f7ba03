#include "colorfact/family.hpp"

#include <array>
#include <utility>

namespace colorfact {
namespace {

constexpr std::array<std::pair<CountFamily, std::string_view>, 12> kFamilyNames{{
    {CountFamily::A, "A"},
    {CountFamily::B, "B"},
    {CountFamily::a, "a"},
    {CountFamily::b, "b"},
    {CountFamily::OrderedA, "At"},
    {CountFamily::OrderedB, "Bt"},
    {CountFamily::OrderedExactA, "at"},
    {CountFamily::OrderedExactB, "bt"},
    {CountFamily::MuF, "muf"},
    {CountFamily::MuG, "mug"},
    {CountFamily::Divisor, "dl"},
    {CountFamily::OrderedParts, "fl"},
}};

constexpr std::array<std::pair<Method, std::string_view>, 4> kMethodNames{{
    {Method::Default, "default"},
    {Method::Dirichlet, "dirichlet"},
    {Method::Recursion, "recursion"},
    {Method::Closed, "closed"},
}};

}  // namespace

std::string_view family_name(CountFamily family) {
  for (const auto& [f, name] : kFamilyNames) {
    if (f == family) return name;
  }
  return "?";
}

std::optional<CountFamily> parse_family(std::string_view name) {
  for (const auto& [f, alias] : kFamilyNames) {
    if (alias == name) return f;
  }
  return std::nullopt;
}

std::string_view method_name(Method method) {
  for (const auto& [m, name] : kMethodNames) {
    if (m == method) return name;
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view name) {
  for (const auto& [m, alias] : kMethodNames) {
    if (alias == name) return m;
  }
  return std::nullopt;
}

}  // namespace colorfact
