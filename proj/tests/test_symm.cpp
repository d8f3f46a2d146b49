#include <doctest.h>

#include <random>

#include "mucrit/poly.hpp"
#include "mucrit/symm.hpp"
#include "oracles.hpp"

using namespace mucrit;

TEST_CASE("power sums") {
  Field f(41);
  const auto ps = power_sums(FpSet(f, {0, 1, 9, 32, 40}), 4);
  CHECK(ps[0] == 5);
  CHECK(ps[1] == 0);
  CHECK(ps[2] == 0);
  CHECK(ps[3] == 0);
  CHECK(ps[4] == 4);
  const auto sym = power_sums(FpSet(f, {1, -1}), 6);
  for (int k = 1; k <= 6; ++k) CHECK(sym[k] == (k % 2 ? 0u : 2u));
  const auto single = power_sums(FpSet(f, {3}), 5);
  for (u64 k = 0; k <= 5; ++k) CHECK(single[k] == f.pow(3, k));
}

TEST_CASE("complete homogeneous") {
  Field f(7);
  const FpSet a(f, {1, 2});
  CHECK(complete_homogeneous(a, 0) == 1);
  CHECK(complete_homogeneous(a, 1) == power_sums(a, 1)[1]);
  CHECK(complete_homogeneous(a, 2) == 0);

  std::mt19937_64 rng(7);
  Field g(97);
  for (int trial = 0; trial < 50; ++trial) {
    FpSet s = FpSet::from_canonical(g, oracle::random_subset(rng, 97, 1 + rng() % 6));
    const auto h = complete_homogeneous_list(s, 20);
    // prod (1 - a x) * sum h_m x^m = 1 + O(x^21)
    FpPoly den = FpPoly::constant(g, 1);
    for (u64 x : s) den = den * FpPoly::from_signed(g, {1, -static_cast<i64>(x)});
    const FpPoly prod = den * FpPoly(g, h);
    CHECK(prod.coeff(0) == 1);
    for (std::size_t k = 1; k <= 20; ++k) CHECK(prod.coeff(k) == 0);
    // brute-force monomial count for h_2
    u64 h2 = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i; j < s.size(); ++j) h2 = g.add(h2, g.mul(s[i], s[j]));
    CHECK(h[2] == h2);
  }
}

TEST_CASE("Newton conversions") {
  Field f(97);
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    FpSet s = FpSet::from_canonical(f, oracle::random_subset(rng, 97, 6));
    const auto ps = power_sums(s, 6);
    const auto e = newton_convert(f, ps, NewtonDirection::PowerToElementary);
    CHECK(e == elementary_symmetric(s));
    auto back = newton_convert(f, e, NewtonDirection::ElementaryToPower);
    back[0] = ps[0];
    CHECK(back == ps);
    CHECK(newton_convert(f, ps, NewtonDirection::PowerToComplete) == complete_homogeneous_list(s, 6));
    CHECK((e[6] != 0) == !s.contains(0));
  }
  // p1 = p2 = 0 gives e3 = p3 / 3
  const auto e = newton_convert(f, {3, 0, 0, 5}, NewtonDirection::PowerToElementary);
  CHECK(e[3] == f.div(5, 3));
  const auto zero = newton_convert(f, {4, 0, 0, 0, 0}, NewtonDirection::PowerToElementary);
  for (int k = 1; k <= 4; ++k) CHECK(zero[k] == 0);
  CHECK_THROWS_AS(newton_convert(Field(3), {0, 1, 1, 1}, NewtonDirection::PowerToElementary),
                  std::domain_error);
}

TEST_CASE("minimal indices") {
  Field f(41);
  const auto f41 = minimal_indices(FpSet(f, {0, 1, 9, 32, 40}));
  CHECK(f41.n == 4);
  CHECK(minimal_indices(FpSet(f, {1, 3})).n == 1);
  const auto pm = minimal_indices(FpSet(f, {1, -1}));
  CHECK(pm.n == 2);
  CHECK_FALSE(pm.m.has_value());
}

TEST_CASE("recentering kills the first power sum") {
  Field f(97);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    FpSet s = FpSet::from_canonical(f, oracle::random_subset(rng, 97, 2 + rng() % 6));
    const u64 t = f.neg(f.div(power_sums(s, 1)[1], s.size()));
    CHECK(power_sums(s.shifted(t), 1)[1] == 0);
  }
}
