#include <doctest.h>

#include <random>

#include "mucrit/hp.hpp"
#include "mucrit/symm.hpp"
#include "oracles.hpp"

using namespace mucrit;

namespace {

const Field f41(41);
const Field f13(13);

FpSet f41_set() { return FpSet(f41, {0, 1, 9, 32, 40}); }

}  // namespace

TEST_CASE("coefficients on two points") {
  const auto c = hp_coeffs(FpSet(f13, {0, 1}));
  CHECK(c.at(0) == 12);
  CHECK(c.at(1) == 1);
  CHECK(hp_moments_hold(c));
  CHECK_THROWS_AS(hp_coeffs(FpSet(f13, {4})), std::invalid_argument);
}

TEST_CASE("explicit coefficients match an elimination solve") {
  const auto c = hp_coeffs(f41_set());
  CHECK(hp_moments_hold(c));
  CHECK(c.c == oracle::vandermonde_solve(f41_set().values(), 41));
  CHECK(c.c == hp_coeffs_via_derivative(f41_set()).c);

  std::mt19937_64 rng(10);
  for (u64 p : {41ULL, 97ULL, 10007ULL}) {
    Field f(p);
    for (int trial = 0; trial < 40; ++trial) {
      FpSet s = FpSet::from_canonical(f, oracle::random_subset(rng, p, 2 + rng() % 7));
      const auto hc = hp_coeffs(s);
      CHECK(hc.c == oracle::vandermonde_solve(s.values(), p));
      const u64 t = rng() % p;
      const auto shifted = hp_coeffs(s.shifted(t));
      for (u64 x : s) CHECK(shifted.at(f.add(x, t)) == hc.at(x));
    }
  }
}

TEST_CASE("moment sums reproduce complete homogeneous values") {
  std::mt19937_64 rng(11);
  Field f(97);
  for (int trial = 0; trial < 40; ++trial) {
    FpSet s = FpSet::from_canonical(f, oracle::random_subset(rng, 97, 2 + rng() % 6));
    const auto hc = hp_coeffs(s);
    const auto h = complete_homogeneous_list(s, 10);
    for (u64 m = 0; m <= 10; ++m) {
      u64 sum = 0;
      for (std::size_t i = 0; i < s.size(); ++i)
        sum = f.add(sum, f.mul(hc.c[i], f.pow(s[i], m + s.size() - 1)));
      CHECK(sum == h[m]);
    }
  }
}

TEST_CASE("HP polynomial shape") {
  const FpPoly hp = hp_polynomial(f41_set(), 20);
  CHECK(hp.degree() == 20);
  CHECK(hp.leading() == 7);
  for (u64 a : f41_set()) {
    const auto t = taylor_at(hp, f41.neg(a), 5);
    CHECK(t.valuation() == 4);
  }
  CHECK_THROWS_AS(hp_polynomial(FpSet(f13, {1}), 4), std::invalid_argument);
  CHECK_THROWS_AS(hp_polynomial(FpSet(f13, {0, 1, 2}), 11), std::invalid_argument);

  std::mt19937_64 rng(12);
  Field f(10007);
  for (int trial = 0; trial < 20; ++trial) {
    FpSet s = FpSet::from_canonical(f, oracle::random_subset(rng, 10007, 2 + rng() % 5));
    const u64 d = 1 + rng() % 30;
    const FpPoly poly = hp_polynomial(s, d);
    CHECK(poly.degree() == static_cast<long>(d));
    CHECK(poly.leading() == binom_mod(static_cast<i64>(s.size() + d - 1), static_cast<i64>(d), f).value());
  }
}

TEST_CASE("criticality reports") {
  const auto r = criticality(f41_set(), f41_set().negated(), 20);
  CHECK(r.sumset_ok);
  CHECK(r.critical);
  CHECK(r.overlap == 5);
  CHECK_FALSE(r.sumset_equals_mu_zero);
  for (int e : r.epsilon) CHECK(e == 1);

  const FpSet a13(f13, {0, 1, 10});
  const auto r13 = criticality(a13, a13.negated(), 6);
  CHECK(r13.critical);
  CHECK(r13.sumset_equals_mu_zero);

  const FpSet two(f13, {0, 1});
  CHECK(criticality(two, two.negated(), 2).critical);
  CHECK_FALSE(criticality(two, two, 2).sumset_ok);

  const auto mixed = criticality(FpSet(f13, {0, 7}), FpSet(f13, {1, 5}), 4);
  CHECK(mixed.critical);
  CHECK(mixed.sumset_equals_mu);
  CHECK(mixed.overlap == 0);
}

TEST_CASE("power sums over an exact sumset vanish") {
  const FpSet a13(f13, {0, 1, 10});
  CHECK(power_sum_vanishing(a13, a13.negated(), 6));
  CHECK(power_sum_vanishing(FpSet(f13, {0, 7}), FpSet(f13, {1, 5}), 4));
  // A - A is a strict subset of mu_20 with 0, so the precondition fails
  CHECK_THROWS_AS(power_sum_vanishing(f41_set(), f41_set().negated(), 20), std::invalid_argument);
  u64 s4 = 0;
  for (u64 x : f41_set())
    for (u64 y : f41_set()) s4 = f41.add(s4, f41.pow(f41.sub(x, y), 4));
  CHECK(s4 == 40);
}

TEST_CASE("factorization of the HP polynomial") {
  const auto fr = factorization_check(f41_set(), f41_set().negated(), 20);
  CHECK(fr.ok);
  CHECK(fr.constant.value() == 7);
  const FpSet a13(f13, {0, 1, 10});
  CHECK(factorization_check(a13, a13.negated(), 6).ok);
  CHECK(factorization_check(FpSet(f13, {0, 7}), FpSet(f13, {1, 5}), 4).ok);
  CHECK_THROWS_AS(factorization_check(FpSet(f13, {0, 1}), FpSet(f13, {0, 1}), 2),
                  std::invalid_argument);
}

TEST_CASE("HP vanishing orders at B") {
  const FpSet a(f13, {0, 7}), b(f13, {1, 5});
  const FpPoly hp = hp_polynomial(a, 4);
  for (u64 x : b) CHECK(taylor_at(hp, x, 3).valuation() == 2);
  const FpSet a13(f13, {0, 1, 10});
  const FpPoly hp13 = hp_polynomial(a13, 6);
  for (u64 x : a13.negated()) CHECK(taylor_at(hp13, x, 3).valuation() == 2);
}

TEST_CASE("fractional transform") {
  const FpSet t = fractional_transform(f41_set(), 0, 20);
  CHECK(t.size() == 5);
  CHECK(criticality(t, t.negated(), 20).critical);
  const FpSet a13(f13, {0, 1, 10});
  const FpSet t13 = fractional_transform(a13, 1, 6);
  CHECK(t13 == FpSet(f13, {0, 1, static_cast<i64>(f13.inv(f13.sub(1, 10)))}));
  CHECK_THROWS_AS(fractional_transform(a13, 2, 6), std::invalid_argument);
}

TEST_CASE("reciprocal sets and the polynomial identity") {
  const FpSet a(f13, {0, 7}), b(f13, {1, 5});
  CHECK(reciprocal_set(a, 1).size() == 2);
  CHECK_THROWS_AS(reciprocal_set(a, 6), std::invalid_argument);
  for (u64 y : b) {
    const auto rep = reciprocal_identity_check(a, b, 4, y);
    CHECK(rep.ok);
    CHECK(rep.coefficient_relation_ok);
    // alpha = 2, so the sign (-1)^{alpha-1} is visible
    CHECK_FALSE(rep.unsigned_relation_ok);
    CHECK(rep.c_infinity.value() == f13.neg(rep.c_infinity_unsigned.value()));
  }
}

TEST_CASE("relations X and Y") {
  const FpSet a(f13, {0, 7}), b(f13, {1, 5});
  for (u64 y : b) {
    CHECK(relation_x(a, b, y, 4).ok);
    CHECK(relation_y(a, b, y, 4).ok);
  }
  const FpSet perturbed(f13, {1, 6});
  CHECK_FALSE(relation_x(a, perturbed, 1, 4).ok);
  CHECK_THROWS_AS(relation_x(a, b, 1, 14), std::domain_error);
}
