#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace colorfact {

/// The counting functions the library knows how to evaluate.
enum class CountFamily {
  A,           // unordered, at most l colors
  B,           // unordered distinct, at most l colors
  a,           // unordered, exactly l colors
  b,           // unordered distinct, exactly l colors
  OrderedA,    // ordered, at most l colors
  OrderedB,    // ordered distinct, at most l colors
  OrderedExactA,
  OrderedExactB,
  MuF,         // even-minus-odd surplus over unordered factorizations
  MuG,         // same over distinct factorizations
  Divisor,     // d_l: ordered l-tuples of parts >= 1
  OrderedParts,  // ordered factorizations into exactly l parts >= 2
};

/// Evaluation route. `Default` lets each family pick its primary route.
enum class Method { Default, Dirichlet, Recursion, Closed };

/// ASCII alias used on the command line: A B a b At Bt at bt muf mug dl fl.
std::string_view family_name(CountFamily family);
std::optional<CountFamily> parse_family(std::string_view name);

std::string_view method_name(Method method);
std::optional<Method> parse_method(std::string_view name);

/// A fully specified counting question minus the integer n.
/// For A and B, a part count `k` selects the refinements f_{k,l} and g_{k,l}.
/// MuF and MuG ignore l (it is fixed at -1); OrderedParts uses l as the part count.
struct CountQuery {
  CountFamily family = CountFamily::A;
  int l = 1;
  std::optional<int> k;
  Method method = Method::Default;

  friend auto operator<=>(const CountQuery&, const CountQuery&) = default;
};

}  // namespace colorfact
