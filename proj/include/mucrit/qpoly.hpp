#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace mucrit {

using Rational = mpq_class;

/// Sparse polynomial over Q in a fixed number of variables. Exponent vectors
/// have length nvars(); zero coefficients are never stored.
class QPoly {
 public:
  using Monomial = std::vector<unsigned>;

  explicit QPoly(std::size_t nvars = 1) : nvars_(nvars) {}
  static QPoly constant(std::size_t nvars, const Rational& c);
  static QPoly variable(std::size_t nvars, std::size_t index);
  /// c * x_index^e
  static QPoly term(std::size_t nvars, std::size_t index, unsigned e, const Rational& c = 1);
  /// sum_j coeffs[j] x_index^j
  static QPoly univariate(std::size_t nvars, std::size_t index, const std::vector<Rational>& coeffs);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coeff(const Monomial& m) const;
  /// Highest exponent of x_index; -1 for the zero polynomial.
  long degree(std::size_t index) const;
  /// Coefficient of x_index^e as a polynomial in the remaining variables
  /// (x_index kept in the variable list with exponent 0).
  QPoly coeff_of(std::size_t index, unsigned e) const;
  /// Dense coefficients in x_index; throws std::invalid_argument if another
  /// variable occurs.
  std::vector<Rational> univariate_coeffs(std::size_t index) const;

  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  QPoly operator-() const;
  QPoly scale(const Rational& c) const;
  QPoly pow(unsigned e) const;
  QPoly derivative(std::size_t index) const;
  /// Replace x_index by the polynomial value (same variable count).
  QPoly substitute(std::size_t index, const QPoly& value) const;
  Rational evaluate(const std::vector<Rational>& point) const;

  bool operator==(const QPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  void check_same(const QPoly& o) const;

  std::size_t nvars_;
  std::map<Monomial, Rational> terms_;
};

/// Falling factorial x (x-1) ... (x-m+1); 1 for m = 0.
QPoly falling_factorial(const QPoly& x, unsigned m);

/// Remainder of a univariate polynomial in x_index modulo a monic one.
QPoly univariate_rem(const QPoly& a, const QPoly& monic_mod, std::size_t index);

/// Determinant of a square rational matrix by exact elimination.
Rational determinant(std::vector<std::vector<Rational>> m);

/// Resultant of two univariate polynomials (coefficients low degree first)
/// through the Sylvester matrix.
Rational resultant(const std::vector<Rational>& f, const std::vector<Rational>& g);

/// u * r + v in Q[k][r]/(2 r^2 + 1), with u, v polynomials in one variable k.
/// Multiplication rewrites r^2 as -1/2 immediately.
class QQuadElem {
 public:
  QQuadElem() : u_(1), v_(1) {}
  QQuadElem(QPoly u, QPoly v);
  static QQuadElem rational(const Rational& c);
  /// The generator r itself.
  static QQuadElem root();
  /// The variable k as an element.
  static QQuadElem k();
  /// Reduce a polynomial in (r, k) (variable 0 = r, variable 1 = k).
  static QQuadElem reduce(const QPoly& in_r_k);

  const QPoly& u() const noexcept { return u_; }
  const QPoly& v() const noexcept { return v_; }

  QQuadElem operator+(const QQuadElem& o) const;
  QQuadElem operator-(const QQuadElem& o) const;
  QQuadElem operator*(const QQuadElem& o) const;
  QQuadElem operator-() const;
  QQuadElem scale(const Rational& c) const;
  QQuadElem conjugate() const;
  /// v^2 + u^2/2, an element of Q[k].
  QPoly norm() const;
  /// Throws std::domain_error unless the norm is a nonzero rational constant.
  QQuadElem inverse() const;

  bool operator==(const QQuadElem& o) const { return u_ == o.u_ && v_ == o.v_; }
  std::string to_string() const;

 private:
  QPoly u_;
  QPoly v_;
};

}  // namespace mucrit
