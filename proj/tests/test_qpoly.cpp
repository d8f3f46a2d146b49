#include <doctest.h>

#include <random>

#include "mucrit/qpoly.hpp"

using namespace mucrit;

namespace {

Rational small_rational(std::mt19937_64& rng) {
  const long num = static_cast<long>(rng() % 41) - 20;
  const long den = 1 + static_cast<long>(rng() % 7);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

QPoly random_poly(std::mt19937_64& rng, std::size_t nvars, unsigned max_deg, int terms) {
  QPoly out(nvars);
  for (int t = 0; t < terms; ++t) {
    QPoly m = QPoly::constant(nvars, small_rational(rng));
    for (std::size_t v = 0; v < nvars; ++v) m = m * QPoly::term(nvars, v, rng() % (max_deg + 1));
    out = out + m;
  }
  return out;
}

}  // namespace

TEST_CASE("ring operations commute with evaluation") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const QPoly a = random_poly(rng, 3, 3, 4), b = random_poly(rng, 3, 3, 4);
    const std::vector<Rational> pt{small_rational(rng), small_rational(rng), small_rational(rng)};
    CHECK((a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt));
    CHECK((a - b).evaluate(pt) == a.evaluate(pt) - b.evaluate(pt));
    CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
    CHECK(a.pow(3).evaluate(pt) == a.evaluate(pt) * a.evaluate(pt) * a.evaluate(pt));
    const QPoly sub = random_poly(rng, 3, 2, 2);
    std::vector<Rational> moved = pt;
    moved[1] = sub.evaluate(pt);
    CHECK(a.substitute(1, sub).evaluate(pt) == a.evaluate(moved));
  }
}

TEST_CASE("derivative obeys the product rule") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const QPoly a = random_poly(rng, 2, 4, 3), b = random_poly(rng, 2, 4, 3);
    CHECK((a * b).derivative(0) == a.derivative(0) * b + a * b.derivative(0));
  }
  const QPoly x = QPoly::variable(1, 0);
  CHECK(x.pow(5).derivative(0) == QPoly::term(1, 0, 4, 5));
}

TEST_CASE("falling factorial") {
  const QPoly x = QPoly::variable(1, 0);
  const QPoly ff = falling_factorial(x, 3);
  CHECK(ff.evaluate({Rational(7)}) == 7 * 6 * 5);
  CHECK(ff.evaluate({Rational(2)}) == 0);
  CHECK(falling_factorial(x, 0) == QPoly::constant(1, 1));
}

TEST_CASE("remainder by a monic polynomial") {
  std::mt19937_64 rng(5);
  const QPoly m = QPoly::univariate(1, 0, {Rational(-1), 0, 1});  // x^2 - 1
  for (int trial = 0; trial < 30; ++trial) {
    const QPoly a = random_poly(rng, 1, 7, 4);
    const QPoly r = univariate_rem(a, m, 0);
    CHECK(r.degree(0) < 2);
    CHECK(r.evaluate({Rational(1)}) == a.evaluate({Rational(1)}));
    CHECK(r.evaluate({Rational(-1)}) == a.evaluate({Rational(-1)}));
  }
}

TEST_CASE("resultant equals the product of root differences") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<long> ra, rb;
    for (unsigned i = 0, n = 1 + rng() % 3; i < n; ++i) ra.push_back(static_cast<long>(rng() % 11) - 5);
    for (unsigned i = 0, n = 1 + rng() % 3; i < n; ++i) rb.push_back(static_cast<long>(rng() % 11) - 5);
    const QPoly x = QPoly::variable(1, 0);
    QPoly fa = QPoly::constant(1, 1), fb = QPoly::constant(1, 1);
    for (long r : ra) fa = fa * (x - QPoly::constant(1, r));
    for (long r : rb) fb = fb * (x - QPoly::constant(1, r));
    Rational expect = 1;
    for (long a : ra)
      for (long b : rb) expect *= a - b;
    CHECK(resultant(fa.univariate_coeffs(0), fb.univariate_coeffs(0)) == expect);
  }
}

TEST_CASE("determinant of a small matrix") {
  CHECK(determinant({{1, 2}, {3, 4}}) == -2);
  CHECK(determinant({{0, 1, 0}, {1, 0, 0}, {0, 0, 5}}) == -5);
}

TEST_CASE("quadratic ring: product with the conjugate is the norm") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const QQuadElem x(random_poly(rng, 1, 2, 3), random_poly(rng, 1, 2, 3));
    const QQuadElem prod = x * x.conjugate();
    CHECK(prod.u().is_zero());
    CHECK(prod.v() == x.norm());
    CHECK(prod.v() == x.v() * x.v() + (x.u() * x.u()).scale(Rational(1, 2)));
    const QQuadElem y(random_poly(rng, 1, 2, 3), random_poly(rng, 1, 2, 3));
    CHECK((x * y).norm() == x.norm() * y.norm());
  }
  const QQuadElem r = QQuadElem::root();
  CHECK(r * r == QQuadElem::rational(Rational(-1, 2)));
  const QQuadElem z = r.scale(3) + QQuadElem::rational(2);
  CHECK(z * z.inverse() == QQuadElem::rational(1));
  CHECK_THROWS_AS(QQuadElem::k().inverse(), std::domain_error);
}
