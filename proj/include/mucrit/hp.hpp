#pragma once

#include <vector>

#include "mucrit/fp.hpp"
#include "mucrit/poly.hpp"

namespace mucrit {

/// Moment-normalized coefficients c_a(A): sum_a c_a a^m = [m == |A|-1] for
/// 0 <= m <= |A|-1. c[i] belongs to set.values()[i].
struct HPCoeffs {
  FpSet set;
  std::vector<u64> c;

  u64 at(u64 a) const;
};

/// c_a = 1 / prod_{a' != a} (a - a'), with one batched inversion.
HPCoeffs hp_coeffs(const FpSet& a);
/// Second route: c_a = 1 / f'(a) with f = prod (x - a').
HPCoeffs hp_coeffs_via_derivative(const FpSet& a);
/// Third route: Gaussian elimination on the moment system. O(|A|^3).
HPCoeffs hp_coeffs_vandermonde(const FpSet& a);
/// Checks the moment conditions on given coefficients.
bool hp_moments_hold(const HPCoeffs& c);

/// sum_a c_a(A) (x + a)^{d+|A|-1} - 1. Requires |A| > 1 and |A|+d-1 < p; the
/// result has degree exactly d and leading coefficient C(|A|+d-1, d).
FpPoly hp_polynomial(const FpSet& a, u64 d);

/// Bitset over F_p marking mu_d together with 0.
std::vector<bool> mu_with_zero_bitset(const Field& f, u64 d);

struct CriticalityReport {
  FpSet a;
  FpSet b;
  u64 d = 0;
  bool sumset_ok = false;          // A + B inside mu_d with 0
  std::size_t overlap = 0;         // |(-A) n B|
  bool critical = false;
  bool sumset_equals_mu = false;   // A + B == mu_d
  bool sumset_equals_mu_zero = false;  // A + B == mu_d with 0
  std::vector<int> epsilon;        // aligned with b.values(): 1 iff b in -A
};

CriticalityReport criticality(const FpSet& a, const FpSet& b, u64 d);

/// sum_{a,b} (a+b)^k == 0 for all 1 <= k < d. Throws std::invalid_argument
/// unless A + B is exactly mu_d or mu_d with 0.
bool power_sum_vanishing(const FpSet& a, const FpSet& b, u64 d);

struct FactorizationReport {
  FieldElem constant;
  bool ok = false;
  FpPoly hp;
  FpPoly product;
};

/// HP(x; A, d) against C prod_b (x - b)^{|A| - eps(b)}. Throws
/// std::invalid_argument when (A, B) is not d-critical.
FactorizationReport factorization_check(const FpSet& a, const FpSet& b, u64 d);

/// {0} u {1/(a - a') : a' != a}. Requires a in A and (A, -A) d-critical; the
/// result is checked to be d-critical again (std::logic_error otherwise).
FpSet fractional_transform(const FpSet& a, u64 elem, u64 d);

/// {1/(a + b) : a in A}; throws if some a + b = 0.
FpSet reciprocal_set(const FpSet& a, u64 b);

struct ReciprocalIdentityReport {
  FpPoly lhs;
  FpPoly rhs;
  FieldElem c0;          // C(|A|+d-1, |A|)
  FieldElem c_infinity;  // leading coefficient of the left side
  FieldElem c_infinity_unsigned;  // prod_{a} (a + b)
  bool ok = false;
  bool coefficient_relation_ok = false;  // c_{1/(a+b)}(A_b) = (-1)^{|A|-1} C c_a (a+b)^{|A|-2}
  bool unsigned_relation_ok = false;     // same without the sign
};

/// Checks, for A + B = mu_d and b in B,
///   sum_a c_{1/(a+b)}(A_b) (a+b) (x + 1/(a+b))^{|A|+d-1}
///     = K x^{|A|+d-1} + C_0 x^{|A|-1} prod_{b' != b} (x + 1/(b-b'))^{|A|}
/// with K = (-1)^{|A|-1} prod_a (a+b) and C_0 = C(|A|+d-1, |A|).
ReciprocalIdentityReport reciprocal_identity_check(const FpSet& a, const FpSet& b, u64 d, u64 elem_b);

struct RelationReport {
  FieldElem lhs;
  FieldElem rhs;
  bool ok = false;
};

/// sum_a 1/(a+b) against alpha(alpha+1)/(d-1) * sum_{b' != b} 1/(b-b').
RelationReport relation_x(const FpSet& a, const FpSet& b, u64 elem_b, u64 d);
/// (sum 1/(a+b))^2 + sum 1/(a+b)^2 against
/// alpha(alpha+1)(alpha+2)/((d-1)(d-2)) (alpha S1^2 - S2).
RelationReport relation_y(const FpSet& a, const FpSet& b, u64 elem_b, u64 d);

/// S_j(b) = sum_{b' in B, b' != b} (b - b')^{-j}, j = 1..3.
struct LocalSums {
  u64 s1 = 0, s2 = 0, s3 = 0;
};
LocalSums local_sums(const FpSet& set, u64 elem);

}  // namespace mucrit
