#include <doctest.h>

#include <random>

#include "mucrit/poly.hpp"
#include "mucrit/symm.hpp"
#include "oracles.hpp"

using namespace mucrit;

TEST_CASE("from_roots") {
  Field f5(5);
  CHECK(from_roots(FpSet(f5, {0, 1})).coeffs() == std::vector<u64>{0, 4, 1});
  Field f13(13);
  CHECK(from_roots(FpSet(f13, {0, 1, 10})) == FpPoly::from_signed(f13, {0, 10, -11, 1}));
  const FpPoly cube = from_roots(FpSet(f13, {2}), 3);
  CHECK(cube == FpPoly::from_signed(f13, {-8, 12, -6, 1}));
}

TEST_CASE("derivative of from_roots at a root is the product of differences") {
  std::mt19937_64 rng(3);
  Field f(97);
  for (int trial = 0; trial < 100; ++trial) {
    const auto vals = oracle::random_subset(rng, 97, 2 + trial % 9);
    FpSet s = FpSet::from_canonical(f, vals);
    const FpPoly d = from_roots(s).derivative();
    for (u64 x : s) {
      u64 prod = 1;
      for (u64 y : s)
        if (y != x) prod = f.mul(prod, f.sub(x, y));
      CHECK(d.eval(x) == prod);
    }
  }
}

TEST_CASE("division and gcd") {
  Field f(13);
  const FpPoly a = FpPoly::from_signed(f, {1, 2, 3, 4, 5});
  const FpPoly b = FpPoly::from_signed(f, {7, 0, 1});
  const auto [q, r] = a.divmod(b);
  CHECK(q * b + r == a);
  CHECK(r.degree() < b.degree());
  CHECK_THROWS_AS(a.divmod(FpPoly(f)), std::domain_error);
  const FpPoly g = gcd(from_roots(FpSet(f, {1, 2, 3})), from_roots(FpSet(f, {2, 3, 4})));
  CHECK(g == from_roots(FpSet(f, {2, 3})));
}

TEST_CASE("rational roots") {
  Field f(10007);
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const auto vals = oracle::random_subset(rng, 10007, 1 + trial % 7);
    // irreducible quadratic factor x^2 - nonresidue keeps extra roots out
    FpPoly extra = FpPoly::from_signed(f, {-5, 0, 1});
    const FpPoly poly = from_roots(FpSet::from_canonical(f, vals)) * extra;
    CHECK(rational_roots(poly) == vals);
  }
  Field small(13);
  CHECK(rational_roots(FpPoly::from_signed(small, {1, 0, 1})) == std::vector<u64>{5, 8});
  CHECK(root_multiplicity(from_roots(FpSet(small, {3}), 4), 3) == 4);
}

TEST_CASE("taylor expansion") {
  Field f(101);
  const auto t = taylor_at(FpPoly::from_signed(f, {0, 0, 1}), 1, 3);
  CHECK(t.coeffs() == std::vector<u64>{1, 2, 1});

  const FpPoly m = from_roots(FpSet(f, {7}), 3) * FpPoly::from_signed(f, {1, 1});
  const auto tm = taylor_at(m, 7, 5);
  CHECK(tm.valuation() == 3);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<u64> c(1 + rng() % 51);
    for (auto& x : c) x = rng() % 101;
    c.back() = 1 + rng() % 100;
    const FpPoly poly(f, c);
    const u64 a = rng() % 101;
    const auto tay = taylor_at(poly, a, static_cast<long>(c.size()));
    // re-expand sum_j t_j (x - a)^j at 0
    FpPoly back(f);
    FpPoly pw = FpPoly::constant(f, 1);
    for (long j = 0; j < static_cast<long>(c.size()); ++j) {
      back = back + pw.scale(tay.coeff(j));
      pw = pw * FpPoly::linear_root(f, a);
    }
    CHECK(back == poly);
    CHECK(poly.shift(a).coeffs() == FpPoly(f, tay.coeffs()).coeffs());
  }
}

TEST_CASE("taylor at a root of x^11 + 11x^6 + x") {
  // p = 331 is 1 mod 330, so the polynomial has rational roots there when it splits
  for (u64 p : {331ULL, 661ULL, 991ULL, 10007ULL}) {
    Field f(p);
    const FpPoly poly = FpPoly::from_signed(f, {0, 1, 0, 0, 0, 0, 11, 0, 0, 0, 0, 1});
    for (u64 xi : rational_roots(poly)) {
      const auto t = taylor_at(poly, xi, 2);
      CHECK(t.coeff(0) == 0);
      CHECK(t.coeff(1) == poly.derivative().eval(xi));
    }
  }
}

TEST_CASE("log derivative series") {
  Field f(7);
  const auto lin = log_derivative_series(FpPoly::linear_root(f, 3), std::nullopt, 6);
  for (long l = 0; l < 5; ++l) CHECK(lin.coeff(l + 1) == f.pow(3, l));

  const FpSet b(f, {1, 3});
  const auto inf = log_derivative_series(from_roots(b), std::nullopt, 5);
  CHECK(inf.coeff(1) == 2);
  CHECK(inf.coeff(2) == 4);
  CHECK(inf.coeff(3) == 3);

  const auto at1 = log_derivative_series(from_roots(b), 1, 3);
  CHECK(at1.start() == -1);
  CHECK(at1.coeff(-1) == 1);
  CHECK(at1.coeff(0) == f.inv(f.sub(1, 3)));
  CHECK(at1.coeff(1) == f.neg(f.inv(4)));
  CHECK_THROWS_AS(log_derivative_series(from_roots(b, 2), 1, 3), std::invalid_argument);

  std::mt19937_64 rng(6);
  for (u64 p : {11ULL, 41ULL, 97ULL}) {
    Field fp(p);
    for (int trial = 0; trial < 20; ++trial) {
      const auto vals = oracle::random_subset(rng, p, 1 + rng() % 6);
      FpSet s = FpSet::from_canonical(fp, vals);
      const auto ser = log_derivative_series(from_roots(s), std::nullopt, 22);
      const auto ps = power_sums(s, 20);
      for (long l = 0; l <= 20; ++l) CHECK(ser.coeff(l + 1) == ps[l]);
    }
  }
}

TEST_CASE("series arithmetic") {
  Field f(13);
  TruncatedSeries a(f, 0, 0, {1, 1}, 5);  // 1 + u
  TruncatedSeries b(f, 0, 0, {1}, 5);
  const auto q = b / a;                    // 1 - u + u^2 - ...
  CHECK(q.coeff(0) == 1);
  CHECK(q.coeff(3) == 12);
  CHECK((q * a).coeff(4) == 0);
  TruncatedSeries c(f, 1, 0, {1}, 5);
  CHECK_THROWS_AS(a + c, std::invalid_argument);
  CHECK_THROWS_AS(a.coeff(5), std::out_of_range);
}
