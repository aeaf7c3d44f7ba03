#include <doctest.h>

#include <atomic>
#include <thread>

#include "colorfact/counting.hpp"
#include "colorfact/dirichlet.hpp"
#include "colorfact/errors.hpp"
#include "support.hpp"

using namespace colorfact;

namespace {

// Naive O(N^2) convolution used as an independent check of the sieve loop.
ArithSeq naive_convolve(const ArithSeq& a, const ArithSeq& b) {
  ArithSeq out(a.limit());
  for (std::size_t n = 1; n <= a.limit(); ++n) {
    for (std::size_t d = 1; d <= n; ++d) {
      if (n % d == 0) out(n) += a(d) * b(n / d);
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("dirichlet") {
  TEST_CASE("identity element") {
    const auto a = testing::random_seq(100);
    CHECK(convolve(a, ArithSeq::identity(100)) == a);
    CHECK(convolve(ArithSeq::identity(100), a) == a);
  }

  TEST_CASE("f * f at 12 counts two-colored factorizations") {
    const ArithSeq f = unordered_sequence(12, PartRule::Repeated);
    CHECK(f(12) == 4);
    CHECK(convolve(f, f)(12) == 16);
    CHECK(power(f, 2)(12) == 16);
  }

  TEST_CASE("power of f-bar gives exactly two colors") {
    CHECK(power(unordered_sequence_bar(12, PartRule::Repeated), 2)(12) == 8);
    CHECK(power(unordered_sequence_bar(12, PartRule::Distinct), 2)(12) == 6);
  }

  TEST_CASE("convolution matches the naive divisor sum and commutes") {
    const auto a = testing::random_seq(200);
    const auto b = testing::random_seq(200);
    CHECK(convolve(a, b) == naive_convolve(a, b));
    CHECK(convolve(a, b) == convolve(b, a));
  }

  TEST_CASE("associativity") {
    const auto a = testing::random_seq(200);
    const auto b = testing::random_seq(200);
    const auto c = testing::random_seq(200);
    CHECK(convolve(convolve(a, b), c) == convolve(a, convolve(b, c)));
  }

  TEST_CASE("mismatched limits are rejected") {
    CHECK_THROWS_AS(convolve(ArithSeq(10), ArithSeq(11)), UsageError);
  }

  TEST_CASE("repeated squaring agrees with naive powers") {
    const auto a = testing::random_seq(150, -2, 2);
    ArithSeq naive = a;
    CHECK(power(a, 1) == a);
    for (unsigned l = 2; l <= 5; ++l) {
      naive = convolve(naive, a);
      REQUIRE(power(a, l) == naive);
    }
    CHECK(power(a, 0) == ArithSeq::identity(150));
  }

  TEST_CASE("inverse") {
    CHECK(inverse(ArithSeq::identity(50)) == ArithSeq::identity(50));
    CHECK(inverse(ordered_coefficients(12, 2))(12) == 42);
    CHECK_THROWS_AS(inverse(ArithSeq::constant(10, BigCount(2))), DomainError);

    for (int trial = 0; trial < 5; ++trial) {
      const std::size_t limit = testing::uniform(1, 300);
      const auto a = testing::random_unit_seq(limit);
      REQUIRE(inverse(inverse(a)) == a);
      REQUIRE(convolve(a, inverse(a)) == ArithSeq::identity(limit));
    }
  }

  TEST_CASE("equality compares the common prefix") {
    const auto a = unordered_sequence(50, PartRule::Repeated);
    const auto b = unordered_sequence(80, PartRule::Repeated);
    CHECK(a == b);
  }

  TEST_CASE("bivariate power marginalizes to the scalar power") {
    const auto table = unordered_parts_table(300, PartRule::Distinct);
    const auto ones = [](std::size_t) { return BigCount(1); };
    CHECK(table.evaluate(ones) == unordered_sequence(300, PartRule::Distinct));
    for (unsigned l = 1; l <= 3; ++l) {
      REQUIRE(power(table, l).evaluate(ones) == power(unordered_sequence(300, PartRule::Distinct), l));
    }
    const auto squared = power(table, 2);
    CHECK(squared.at(1, 0) == 1);
    CHECK(squared.at(1, 1) == 0);
    CHECK(squared.at(12, 1) == 2);
    CHECK(squared.at(12, 2) == 8);
    CHECK(squared.at(12, 3) == 2);
    CHECK(squared.at(12, 4) == 0);
  }

  TEST_CASE("signature cache serves equal signatures from one entry") {
    SignatureCache cache;
    int computed = 0;
    auto compute = [&](const CountQuery& q, const FactoredInteger& canonical) {
      ++computed;
      CHECK(canonical.value() == 12);
      return compute_direct(q, canonical);
    };
    const CountQuery q{CountFamily::A, 2, std::nullopt, Method::Default};
    CHECK(eval_by_signature(cache, q, factorize(75), compute) == 16);
    CHECK(eval_by_signature(cache, q, factorize(12), compute) == 16);
    CHECK(eval_by_signature(cache, q, factorize(3 * 3 * 7), compute) == 16);
    CHECK(computed == 1);
    CHECK(cache.size() == 1);
  }

  TEST_CASE("value at 1 is one for at-most families") {
    SignatureCache cache;
    for (CountFamily f : {CountFamily::A, CountFamily::B, CountFamily::OrderedA, CountFamily::OrderedB,
                          CountFamily::MuF, CountFamily::MuG, CountFamily::Divisor}) {
      const CountQuery q{f, 2, std::nullopt, Method::Default};
      CHECK(eval_by_signature(cache, q, factorize(1), compute_direct) == 1);
    }
  }

  TEST_CASE("signature evaluation agrees with direct computation") {
    const CountFamily families[] = {CountFamily::A, CountFamily::B, CountFamily::OrderedA, CountFamily::OrderedB,
                                    CountFamily::a, CountFamily::b};
    for (int trial = 0; trial < 500; ++trial) {
      const std::uint64_t n = testing::uniform(1, 10000);
      const int l = static_cast<int>(testing::uniform(1, 3));
      const CountFamily family = families[testing::uniform(0, 5)];
      const CountQuery q{family, l, std::nullopt, Method::Default};
      const auto fn = factorize(n);
      REQUIRE(evaluate(q, fn) == compute_direct(q, fn));
    }
  }

  TEST_CASE("concurrent lookups compute each key once") {
    SignatureCache cache;
    std::atomic<int> computed{0};
    auto compute = [&](const CountQuery& q, const FactoredInteger& canonical) {
      ++computed;
      std::this_thread::sleep_for(std::chrono::milliseconds(20));
      return compute_direct(q, canonical);
    };
    const CountQuery q{CountFamily::B, 3, std::nullopt, Method::Default};
    std::vector<BigCount> results(8);
    std::vector<std::thread> threads;
    const std::uint64_t inputs[] = {720, 1680, 720, 3 * 3 * 3 * 3 * 5 * 5 * 7, 720, 240 * 7, 720, 720};
    for (std::size_t i = 0; i < 8; ++i) {
      threads.emplace_back([&, i] { results[i] = eval_by_signature(cache, q, factorize(inputs[i]), compute); });
    }
    for (auto& t : threads) t.join();
    // 720 = 2^4 3^2 5 and 3^4 5^2 7 share a signature; 1680 = 2^4 3 5 7 is the other.
    CHECK(computed.load() == 2);
    for (std::size_t i = 0; i < 8; ++i) CHECK(results[i] == compute_direct(q, factorize(inputs[i])));
  }
}
