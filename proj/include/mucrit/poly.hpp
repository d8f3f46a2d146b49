#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mucrit/fp.hpp"

namespace mucrit {

/// Dense univariate polynomial over F_p, low degree first, no trailing zeros.
/// The zero polynomial has an empty coefficient vector and degree -1.
class FpPoly {
 public:
  explicit FpPoly(const Field& f) : field_(f) {}
  FpPoly(const Field& f, std::vector<u64> coeffs);
  static FpPoly from_signed(const Field& f, std::initializer_list<i64> coeffs);
  static FpPoly constant(const Field& f, u64 c);
  static FpPoly monomial(const Field& f, u64 c, std::size_t deg);
  /// x - a
  static FpPoly linear_root(const Field& f, u64 a);

  const Field& field() const noexcept { return field_; }
  const std::vector<u64>& coeffs() const noexcept { return c_; }
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  u64 coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  u64 leading() const noexcept { return c_.empty() ? 0 : c_.back(); }

  u64 eval(u64 x) const;
  FpPoly derivative() const;
  FpPoly nth_derivative(unsigned n) const;
  FpPoly monic() const;
  FpPoly pow(u64 e) const;
  FpPoly scale(u64 c) const;
  /// f(x + t)
  FpPoly shift(u64 t) const;

  FpPoly operator+(const FpPoly& o) const;
  FpPoly operator-(const FpPoly& o) const;
  FpPoly operator*(const FpPoly& o) const;
  FpPoly operator-() const;
  bool operator==(const FpPoly& o) const noexcept {
    return field_ == o.field_ && c_ == o.c_;
  }

  /// Quotient and remainder; throws std::domain_error on a zero divisor.
  std::pair<FpPoly, FpPoly> divmod(const FpPoly& d) const;
  FpPoly operator/(const FpPoly& d) const { return divmod(d).first; }
  FpPoly operator%(const FpPoly& d) const { return divmod(d).second; }

  std::string to_string() const;

 private:
  void trim();
  void check_same(const FpPoly& o) const;

  Field field_;
  std::vector<u64> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
FpPoly gcd(FpPoly a, FpPoly b);
/// base^e mod m
FpPoly powmod(const FpPoly& base, u64 e, const FpPoly& m);

/// Distinct roots of f lying in F_p, ascending (Cantor-Zassenhaus splitting
/// with a deterministic shift sequence).
std::vector<u64> rational_roots(const FpPoly& f);
/// Order of vanishing of f at a (f nonzero).
unsigned root_multiplicity(const FpPoly& f, u64 a);

/// prod_{r in roots} (x - r)^multiplicity, monic.
FpPoly from_roots(const FpSet& roots, unsigned multiplicity = 1);

/// Local expansion sum_j c_j u^{start+j} + O(u^order), where u = x - center,
/// or u = 1/x when center is absent (the point at infinity).
class TruncatedSeries {
 public:
  TruncatedSeries(const Field& f, std::optional<u64> center, long start, std::vector<u64> coeffs,
                  long order);

  const Field& field() const noexcept { return field_; }
  const std::optional<u64>& center() const noexcept { return center_; }
  bool at_infinity() const noexcept { return !center_.has_value(); }
  long start() const noexcept { return start_; }
  long order() const noexcept { return order_; }
  const std::vector<u64>& coeffs() const noexcept { return c_; }
  /// Coefficient of u^e; throws std::out_of_range if e >= order.
  u64 coeff(long e) const;
  /// Lowest exponent with a nonzero coefficient, or order() if none is known.
  long valuation() const;

  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  /// Throws std::domain_error if the divisor has no known nonzero term.
  TruncatedSeries operator/(const TruncatedSeries& o) const;
  TruncatedSeries scale(u64 c) const;

 private:
  void check_compatible(const TruncatedSeries& o) const;
  void normalize();

  Field field_;
  std::optional<u64> center_;
  long start_;
  std::vector<u64> c_;
  long order_;
};

/// Coefficients of f in powers of (x - a) up to exponent order-1, by repeated
/// synthetic division. Coefficient j equals f^{(j)}(a)/j! when j! is a unit.
TruncatedSeries taylor_at(const FpPoly& f, u64 a, long order);

/// Expansion of f in powers of 1/x: f(x) = sum_j c_j x^{-(start+j)}, exact
/// (order = start + deg + 1 ... covers every term).
TruncatedSeries expansion_at_infinity(const FpPoly& f, long order);

/// g'/g expanded at a finite center (Laurent, simple pole at a simple root) or
/// at infinity (coefficients p_l of the roots on u^{l+1}, u = 1/x). Terms are
/// known up to exponent order-1. Throws std::invalid_argument when the center
/// is a multiple root of g.
TruncatedSeries log_derivative_series(const FpPoly& g, std::optional<u64> center, long order);

}  // namespace mucrit
