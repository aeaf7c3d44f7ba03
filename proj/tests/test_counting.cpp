#include <doctest.h>

#include <set>

#include "colorfact/counting.hpp"
#include "colorfact/enumeration.hpp"
#include "colorfact/errors.hpp"

using namespace colorfact;

namespace {

const FactoredInteger kTwelve = factorize(12);

std::vector<std::uint64_t> squarefree_upto(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    if (factorize(n).squarefree()) out.push_back(n);
  }
  return out;
}

}  // namespace

TEST_SUITE("counting") {
  TEST_CASE("uncolored unordered counts") {
    CHECK(count_unordered(12) == 4);
    CHECK(count_unordered(12, 12) == 4);
    CHECK(count_unordered(1) == 1);
    CHECK(count_unordered(97, 97) == 1);
    CHECK(count_unordered(12, 4) == 2);  // {4,3}, {3,2,2}
    CHECK(count_distinct(12) == 3);
    CHECK(count_distinct(4, 4) == 1);
    CHECK(count_distinct(1) == 1);
  }

  TEST_CASE("memoized recursion agrees with the product expansion") {
    const auto f = unordered_sequence(2000, PartRule::Repeated);
    const auto g = unordered_sequence(2000, PartRule::Distinct);
    for (std::uint64_t n = 1; n <= 2000; ++n) {
      REQUIRE(count_unordered(n) == f(n));
      REQUIRE(count_distinct(n) == g(n));
    }
  }

  TEST_CASE("part counts") {
    CHECK(count_by_parts(12, 2, PartRule::Repeated) == 2);
    CHECK(count_by_parts(12, 3, PartRule::Distinct) == 0);
    CHECK(count_by_parts(1, 0, PartRule::Repeated) == 1);
    for (int k = 1; k <= 4; ++k) CHECK(count_by_parts(1, k, PartRule::Repeated) == 0);
  }

  TEST_CASE("worked example at n = 12, l = 2") {
    CHECK(colored_atmost(kTwelve, 2, PartRule::Repeated) == 16);
    CHECK(colored_atmost(kTwelve, 2, PartRule::Distinct) == 12);
    CHECK(colored_exact(kTwelve, 2, CountFamily::a) == 8);
    CHECK(colored_exact(kTwelve, 2, CountFamily::b) == 6);
    CHECK(colored_exact(kTwelve, 2, CountFamily::OrderedExactA) == 26);
    CHECK(colored_exact(kTwelve, 2, CountFamily::OrderedExactB) == 20);
    CHECK(ordered_colored(kTwelve, 2) == 42);
    CHECK(ordered_distinct_colored(kTwelve, 2) == 30);
  }

  TEST_CASE("colored_atmost methods") {
    for (Method m : {Method::Recursion, Method::Dirichlet}) {
      CHECK(colored_atmost(kTwelve, 2, PartRule::Repeated, m) == 16);
      CHECK(colored_atmost(kTwelve, 2, PartRule::Distinct, m) == 12);
      CHECK(colored_atmost(factorize(4), 2, PartRule::Repeated, m) == 5);
    }
    CHECK(colored_atmost(factorize(30), 2, PartRule::Repeated, Method::Closed) == 22);
    CHECK_THROWS_AS(colored_atmost(kTwelve, 2, PartRule::Repeated, Method::Closed), UsageError);
    CHECK_THROWS_AS(colored_atmost(kTwelve, 0, PartRule::Repeated), DomainError);
    CHECK_THROWS_AS(colored_atmost(kTwelve, -2, PartRule::Repeated), DomainError);
    CHECK_THROWS_AS(colored_atmost(kTwelve, -1, PartRule::Repeated, Method::Dirichlet), DomainError);
  }

  TEST_CASE("two-path agreement and exact divisions up to 500") {
    for (PartRule rule : {PartRule::Repeated, PartRule::Distinct}) {
      for (unsigned l = 1; l <= 3; ++l) {
        const auto dense = power(unordered_sequence(500, rule), l);
        for (std::uint64_t n = 1; n <= 500; ++n) {
          RecursionTrace trace;
          REQUIRE(colored_atmost_recursive(factorize(n).exponents(), static_cast<int>(l), rule, &trace) == dense(n));
        }
      }
    }
  }

  TEST_CASE("per-prime recursion divides exactly up to 1e4") {
    // Every division is checked inside; distinct signatures cover every case.
    std::set<PrimeSignature> seen;
    std::size_t divisions = 0;
    for (std::uint64_t n = 2; n <= 10000; ++n) {
      const auto sig = factorize(n).signature();
      if (!seen.insert(sig).second) continue;
      for (int l = 1; l <= 3; ++l) {
        RecursionTrace trace;
        colored_atmost_recursive(sig.exponents(), l, PartRule::Repeated, &trace);
        colored_atmost_recursive(sig.exponents(), l, PartRule::Distinct, &trace);
        colored_by_parts_recursive(sig.exponents(), l, PartRule::Repeated, &trace);
        colored_by_parts_recursive(sig.exponents(), l, PartRule::Distinct, &trace);
        REQUIRE(trace.exact_divisions > 0);
        divisions += trace.exact_divisions;
      }
    }
    CHECK(divisions > 10000);
  }

  TEST_CASE("colored_by_parts") {
    CHECK(colored_by_parts(kTwelve, 1, 2, PartRule::Distinct) == 2);
    CHECK(colored_by_parts(kTwelve, 2, 2, PartRule::Distinct) == 8);
    CHECK(colored_by_parts(kTwelve, 3, 2, PartRule::Distinct) == 2);
    CHECK(colored_by_parts(kTwelve, 9, 2, PartRule::Distinct) == 0);
    CHECK(colored_by_parts(factorize(1), 0, 3, PartRule::Repeated) == 1);
    CHECK(colored_by_parts(factorize(1), 1, 3, PartRule::Repeated) == 0);
    BigCount total = 0;
    for (int k = 0; k <= 3; ++k) total += colored_by_parts(kTwelve, k, 2, PartRule::Repeated);
    CHECK(total == 16);
    CHECK(colored_by_parts(kTwelve, 2, 2, PartRule::Distinct, Method::Dirichlet) == 8);
    CHECK_THROWS_AS(colored_by_parts(kTwelve, 2, 2, PartRule::Distinct, Method::Closed), UsageError);
  }

  TEST_CASE("bivariate paths agree and marginalize") {
    for (PartRule rule : {PartRule::Repeated, PartRule::Distinct}) {
      for (unsigned l = 1; l <= 3; ++l) {
        const auto table = power(unordered_parts_table(300, rule), l);
        for (std::uint64_t n = 1; n <= 300; ++n) {
          const auto row = colored_by_parts_recursive(factorize(n).exponents(), static_cast<int>(l), rule);
          BigCount total = 0;
          for (std::size_t k = 0; k < row.size(); ++k) {
            REQUIRE(row[k] == table.at(n, k));
            total += row[k];
          }
          REQUIRE(total == colored_atmost(factorize(n), static_cast<int>(l), rule));
        }
      }
    }
  }

  TEST_CASE("exact-color counts vanish at 1 and match Dirichlet powers of the bar sequences") {
    for (CountFamily f : {CountFamily::a, CountFamily::b, CountFamily::OrderedExactA, CountFamily::OrderedExactB}) {
      CHECK(colored_exact(factorize(1), 3, f) == 0);
    }
    for (unsigned l = 1; l <= 4; ++l) {
      const auto a = power(unordered_sequence_bar(300, PartRule::Repeated), l);
      const auto b = power(unordered_sequence_bar(300, PartRule::Distinct), l);
      for (std::uint64_t n = 1; n <= 300; ++n) {
        REQUIRE(colored_exact(factorize(n), static_cast<int>(l), CountFamily::a) == a(n));
        REQUIRE(colored_exact(factorize(n), static_cast<int>(l), CountFamily::b) == b(n));
      }
    }
    CHECK_THROWS_AS(colored_exact(kTwelve, 2, CountFamily::A), UsageError);
  }

  TEST_CASE("ordered factorizations into exactly k parts") {
    CHECK(ordered_exact_parts(kTwelve, 2) == 4);
    CHECK(ordered_exact_parts(kTwelve, 3) == 3);
    CHECK(ordered_exact_parts(kTwelve, 1) == 1);
    CHECK(ordered_exact_parts(kTwelve, 4) == 0);
    CHECK(ordered_exact_parts(factorize(1), 2) == 0);
    CHECK(ordered_exact_parts(factorize(1), 0) == 1);
  }

  TEST_CASE("ordered colored counts") {
    CHECK(ordered_colored(kTwelve, 1) == 8);
    CHECK(ordered_colored(factorize(1), 5) == 1);
    BigCount three_power = 1;
    for (int m = 1; m <= 20; ++m) {
      const FactoredInteger pm({{2, m}});
      REQUIRE(ordered_colored(pm, 2) == 2 * three_power);
      three_power *= 3;
    }
    for (std::uint64_t n = 1; n <= 500; ++n) {
      const auto fn = factorize(n);
      for (int l = 1; l <= 3; ++l) {
        const BigCount closed = ordered_colored(fn, l, Method::Closed);
        REQUIRE(closed == ordered_colored(fn, l, Method::Recursion));
        REQUIRE(closed == ordered_colored(fn, l, Method::Dirichlet));
      }
    }
  }

  TEST_CASE("c_l is the Dirichlet inverse of the ordered colored counts") {
    for (int l = 1; l <= 3; ++l) {
      ArithSeq ordered(500);
      for (std::uint64_t n = 1; n <= 500; ++n) ordered(n) = ordered_colored(factorize(n), l);
      REQUIRE(convolve(ordered_coefficients(500, l), ordered) == ArithSeq::identity(500));
    }
  }

  TEST_CASE("ordered distinct colored counts") {
    CHECK(ordered_distinct_colored(kTwelve, 1) == 5);
    CHECK(ordered_distinct_colored(factorize(4), 2) == 4);
    CHECK(ordered_distinct_colored(factorize(1), 2) == 1);
    CHECK(ordered_distinct_colored(kTwelve, 2, Method::Dirichlet) == 30);
    CHECK(ordered_distinct_colored(factorize(30), 2, Method::Closed) == primorial_ordered_closed_form(3, 2));
  }

  TEST_CASE("generalized Moebius functions") {
    CHECK(generalized_moebius(factorize(4), CountFamily::MuF) == 0);
    CHECK(generalized_moebius(kTwelve, CountFamily::MuG) == 1);
    for (std::uint64_t p : {2, 3, 5, 7, 101}) CHECK(generalized_moebius(factorize(p), CountFamily::MuF) == -1);
    for (std::uint64_t n = 1; n <= 500; ++n) {
      const auto fn = factorize(n);
      for (CountFamily which : {CountFamily::MuF, CountFamily::MuG}) {
        const BigCount value = generalized_moebius(fn, which);
        REQUIRE(value == moebius_by_parts(fn, which));
        REQUIRE(value == generalized_moebius(fn, which, Method::Dirichlet));
      }
    }
  }

  TEST_CASE("the l = -1 series is reciprocal to the l = 1 series") {
    ArithSeq mu_f(500);
    ArithSeq mu_g(500);
    for (std::uint64_t n = 1; n <= 500; ++n) {
      mu_f(n) = colored_atmost(factorize(n), -1, PartRule::Distinct);
      mu_g(n) = colored_atmost(factorize(n), -1, PartRule::Repeated);
    }
    CHECK(convolve(mu_f, unordered_sequence(500, PartRule::Distinct)) == ArithSeq::identity(500));
    CHECK(convolve(mu_g, unordered_sequence(500, PartRule::Repeated)) == ArithSeq::identity(500));
  }

  TEST_CASE("squarefree closed forms") {
    CHECK(squarefree_closed_form(2, 2) == 6);
    for (int l = 1; l <= 5; ++l) CHECK(squarefree_closed_form(1, l) == l);
    CHECK(squarefree_closed_form(3, 2) == 22);
    CHECK(primorial_ordered_closed_form(2, 2) == 10);
    for (int l = 1; l <= 5; ++l) CHECK(primorial_ordered_closed_form(1, l) == l);
    CHECK(primorial_ordered_closed_form(2, 1) == 3);
    CHECK_THROWS_AS(squarefree_closed_form(0, 2), DomainError);
  }

  TEST_CASE("squarefree n up to 2310: A = B = closed form") {
    for (std::uint64_t n : squarefree_upto(2310)) {
      const auto fn = factorize(n);
      for (int l = 1; l <= 3; ++l) {
        const BigCount closed = squarefree_closed_form(fn.omega(), l);
        REQUIRE(colored_atmost(fn, l, PartRule::Repeated) == closed);
        REQUIRE(colored_atmost(fn, l, PartRule::Distinct) == closed);
      }
    }
  }

  TEST_CASE("divisor-like functions") {
    CHECK(divisor_like(kTwelve, 2, CountFamily::Divisor) == 6);
    CHECK(divisor_like(kTwelve, 2, CountFamily::OrderedParts) == 4);
    CHECK(divisor_like(factorize(1), 3, CountFamily::Divisor) == 1);
    for (std::uint64_t n = 1; n <= 300; ++n) {
      const auto fn = factorize(n);
      for (int l = 1; l <= 4; ++l) {
        REQUIRE(divisor_like(fn, l, CountFamily::Divisor) == divisor_like(fn, l, CountFamily::Divisor, Method::Closed));
        REQUIRE(divisor_like(fn, l, CountFamily::OrderedParts) ==
                divisor_like(fn, l, CountFamily::OrderedParts, Method::Dirichlet));
      }
    }
  }

  TEST_CASE("divisor functions count colored prime factorizations") {
    for (std::uint64_t n = 1; n <= 200; ++n) {
      const auto fn = factorize(n);
      for (int l = 1; l <= 3; ++l) {
        REQUIRE(divisor_like(fn, l, CountFamily::Divisor) ==
                static_cast<unsigned long>(enum_prime_colored(n, l, false).size()));
        REQUIRE(divisor_like(fn, l, CountFamily::OrderedParts) ==
                static_cast<unsigned long>(enum_prime_colored(n, l, true).size()));
      }
    }
  }

  TEST_CASE("dispatch and validation") {
    CHECK(evaluate({CountFamily::A, 2, std::nullopt, Method::Default}, 75) == 16);
    CHECK(evaluate({CountFamily::B, 2, 2, Method::Default}, 12) == 8);
    CHECK(evaluate({CountFamily::MuG, 7, std::nullopt, Method::Default}, 12) == 1);
    CHECK(evaluate({CountFamily::A, -1, std::nullopt, Method::Default}, 12) == 1);
    CHECK_THROWS_AS(evaluate({CountFamily::OrderedA, 2, 1, Method::Default}, 12), UsageError);
    CHECK_THROWS_AS(evaluate({CountFamily::A, 0, std::nullopt, Method::Default}, 12), DomainError);
    CHECK_THROWS_AS(evaluate({CountFamily::a, -1, std::nullopt, Method::Default}, 12), DomainError);
    CHECK_THROWS_AS(evaluate({CountFamily::MuF, 1, std::nullopt, Method::Closed}, 12), UsageError);
    CHECK_THROWS_AS(evaluate({CountFamily::A, 2, std::nullopt, Method::Dirichlet}, 1ULL << 40), ResourceError);
  }

  TEST_CASE("sequence uses one dense computation where possible") {
    const CountQuery dense{CountFamily::b, 2, std::nullopt, Method::Dirichlet};
    const CountQuery pointwise{CountFamily::b, 2, std::nullopt, Method::Default};
    CHECK(sequence(dense, 200) == sequence(pointwise, 200));
    const CountQuery parts{CountFamily::A, 3, 2, Method::Dirichlet};
    const CountQuery parts_rec{CountFamily::A, 3, 2, Method::Recursion};
    CHECK(sequence(parts, 200) == sequence(parts_rec, 200));
  }
}
