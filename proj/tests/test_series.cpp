#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "qmac/series.hpp"

using namespace qmac;

namespace {

TruncatedSeries make(std::vector<long long> values) {
  std::vector<Int> c(values.begin(), values.end());
  return TruncatedSeries(std::move(c));
}

std::mt19937_64 rng(0x51ab5eedULL);

TruncatedSeries random_series(int order, bool unit_constant = false) {
  std::uniform_int_distribution<long long> coeff(-1'000'000, 1'000'000);
  std::vector<Int> c(static_cast<size_t>(order) + 1);
  for (Int& x : c) x = coeff(rng);
  if (unit_constant) c[0] = (rng() & 1) ? 1 : -1;
  return TruncatedSeries(std::move(c));
}

int random_order(int max_order = 64) {
  std::uniform_int_distribution<int> d(0, max_order);
  return d(rng);
}

}  // namespace

TEST_CASE("factories") {
  CHECK(TruncatedSeries::one(3) == make({1, 0, 0, 0}));
  CHECK(TruncatedSeries::monomial(Int(1), 2, 4) == make({0, 0, 1, 0, 0}));
  // exponent beyond order truncates to zero
  CHECK(TruncatedSeries::monomial(Int(5), 7, 3) == TruncatedSeries::zero(3));
  CHECK(TruncatedSeries::zero(0) == make({0}));
  CHECK_THROWS_AS(TruncatedSeries::monomial(Int(1), -1, 3), std::invalid_argument);
  CHECK_THROWS_AS(TruncatedSeries::zero(-1), std::invalid_argument);
}

TEST_CASE("ring operation examples") {
  // (1+q)^2 at order 1: the q^2 term truncates away
  CHECK(mul(make({1, 1}), make({1, 1})) == make({1, 2}));
  // telescoping (1-q)(1+q+q^2+q^3) at order 3
  CHECK(mul(make({1, -1, 0, 0}), make({1, 1, 1, 1})) == make({1, 0, 0, 0}));
  CHECK(add(make({1, 2, 3}), make({0, -2, 1})) == make({1, 0, 4}));
  CHECK(sub(make({1, 2, 3}), make({0, -2, 1})) == make({1, 4, 2}));
}

TEST_CASE("order mismatch is an error") {
  CHECK_THROWS_AS(add(make({1, 2}), make({1, 2, 3})), std::invalid_argument);
  CHECK_THROWS_AS(sub(make({1}), make({1, 0})), std::invalid_argument);
  CHECK_THROWS_AS(mul(make({1, 2}), make({1})), std::invalid_argument);
}

TEST_CASE("invert examples") {
  CHECK(invert(make({1, -1, 0, 0, 0})) == make({1, 1, 1, 1, 1}));

  // oracle for 1/(1-q)^2: convolve the geometric series with itself
  std::vector<Int> expected(5);
  for (int n = 0; n <= 4; ++n) {
    Int s = 0;
    for (int i = 0; i <= n; ++i) s += 1;
    expected[static_cast<size_t>(n)] = s;
  }
  TruncatedSeries square = mul(make({1, -1, 0, 0, 0}), make({1, -1, 0, 0, 0}));
  CHECK(invert(square) == TruncatedSeries(expected));
  CHECK(invert(square) == make({1, 2, 3, 4, 5}));

  CHECK_THROWS_AS(invert(make({2, 1, 0})), InvalidInversion);
  CHECK_THROWS_AS(invert(make({0, 1})), InvalidInversion);

  // negative unit constant also inverts over Z
  TruncatedSeries a = make({-1, 3, -2, 5});
  CHECK(mul(a, invert(a)) == TruncatedSeries::one(3));
}

TEST_CASE("substitute_power examples") {
  CHECK(substitute_power(make({1, 1}), 2, 4) == make({1, 0, 1, 0, 0}));
  TruncatedSeries geometric = invert(make({1, -1, 0, 0})); // order 3
  CHECK(substitute_power(geometric, 2, 6) == make({1, 0, 1, 0, 1, 0, 1}));
  TruncatedSeries a = make({3, -1, 4, 1});
  CHECK(substitute_power(a, 1, a.order()) == a);
  CHECK_THROWS_AS(substitute_power(a, 0, 5), std::invalid_argument);
}

TEST_CASE("pow, scale, prefix_equal examples") {
  CHECK(pow(make({1, 1, 0}), 2) == make({1, 2, 1}));
  CHECK(pow(make({7, -3, 2}), 0) == TruncatedSeries::one(2));
  CHECK(scale(make({1, -2, 0}), Int(-3)) == make({-3, 6, 0}));
  CHECK(prefix_equal(make({1, 2, 3}), make({1, 2, 9}), 1));
  CHECK_FALSE(prefix_equal(make({1, 2, 3}), make({1, 2, 9}), 2));
  CHECK_THROWS_AS(prefix_equal(make({1, 2}), make({1, 2, 3}), 2), std::invalid_argument);
}

TEST_CASE("ring axioms on random series") {
  for (int iter = 0; iter < 40; ++iter) {
    int order = random_order();
    TruncatedSeries a = random_series(order);
    TruncatedSeries b = random_series(order);
    TruncatedSeries c = random_series(order);
    CHECK(add(a, b) == add(b, a));
    CHECK(mul(a, b) == mul(b, a));
    CHECK(add(add(a, b), c) == add(a, add(b, c)));
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
    CHECK(mul(a, TruncatedSeries::one(order)) == a);
    CHECK(add(a, TruncatedSeries::zero(order)) == a);
    CHECK(sub(a, a) == TruncatedSeries::zero(order));
  }
}

TEST_CASE("invert is a true inverse for unit constant terms") {
  for (int iter = 0; iter < 25; ++iter) {
    int order = random_order(48);
    TruncatedSeries a = random_series(order, /*unit_constant=*/true);
    CHECK(mul(a, invert(a)) == TruncatedSeries::one(order));
    CHECK(invert(invert(a)) == a);
  }
}

TEST_CASE("truncation coherence: compute high, truncate low") {
  for (int iter = 0; iter < 25; ++iter) {
    int high = 8 + random_order(56);
    std::uniform_int_distribution<int> lower(0, high - 1);
    int low = lower(rng);
    TruncatedSeries a = random_series(high, true);
    TruncatedSeries b = random_series(high);
    TruncatedSeries a_low = prefix(a, low);
    TruncatedSeries b_low = prefix(b, low);
    CHECK(prefix(add(a, b), low) == add(a_low, b_low));
    CHECK(prefix(sub(a, b), low) == sub(a_low, b_low));
    CHECK(prefix(mul(a, b), low) == mul(a_low, b_low));
    CHECK(prefix(invert(a), low) == invert(a_low));
    CHECK(prefix(pow(a, 3), low) == pow(a_low, 3));
    CHECK(prefix(scale(a, Int(-7)), low) == scale(a_low, Int(-7)));
    CHECK(prefix(substitute_power(a, 2, high), low) == substitute_power(a, 2, low));
  }
}

TEST_CASE("substitute_power is a ring homomorphism") {
  for (int iter = 0; iter < 25; ++iter) {
    int order = random_order(32);
    std::uniform_int_distribution<int> td(1, 4);
    int t = td(rng);
    TruncatedSeries a = random_series(order);
    TruncatedSeries b = random_series(order);
    int target = order * t;
    CHECK(substitute_power(mul(a, b), t, target) ==
          mul(substitute_power(a, t, target), substitute_power(b, t, target)));
    CHECK(substitute_power(add(a, b), t, target) ==
          add(substitute_power(a, t, target), substitute_power(b, t, target)));
  }
}
