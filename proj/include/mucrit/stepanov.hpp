#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mucrit/fp.hpp"
#include "mucrit/gamma.hpp"
#include "mucrit/poly.hpp"
#include "mucrit/qpoly.hpp"

namespace mucrit {

/// sum_{a' != a} 1/(a-a')^2 == (1/|A|) (sum_{a' != a} 1/(a-a'))^2
bool rat2_check(const FpSet& set, u64 a);
/// sum_{a' != a} 1/(a-a')^3 == (1/|A|^2) (sum_{a' != a} 1/(a-a'))^3
bool rat3_check(const FpSet& set, u64 a);
bool rat2_everywhere(const FpSet& set);
bool rat3_everywhere(const FpSet& set);

/// 4 alpha(alpha-2) g'g''' - 3(alpha-1)(alpha-2) g''^2 - alpha(alpha+1) g g''''
FpPoly d_operator(const FpPoly& g, u64 alpha);
/// Same operator on a polynomial over Q, differentiating in x_index.
QPoly d_operator(const QPoly& g, const Rational& alpha, std::size_t index = 0);

/// (x - a)(1 + s(x - a))^alpha over F_p.
FpPoly local_model(const Field& f, u64 a, u64 s, u64 alpha);

/// The bracket G(alpha, T) of the operator applied to the local model,
/// expanded in (alpha, T); it should be the zero polynomial.
QPoly g_alpha_t();
bool verify_g_zero();

/// D(alpha, l) = 4 alpha(alpha-2)(alpha (l)_3 + l (alpha)_3)
///   - 6(alpha-1)(alpha-2)(alpha)_2 (l)_2 - alpha(alpha+1)((alpha)_4 + (l)_4)
/// in variables (alpha, l).
QPoly d_alpha_l();
/// -alpha(alpha-l+1)(alpha-l)(alpha-l-1)(alpha^2 - (l+5)alpha - l + 6)
QPoly d_alpha_l_factored();
/// Nonnegative integers (l, alpha) with alpha > 1 and
/// alpha^2 - (l+5)alpha - l + 6 = 0, ascending.
std::vector<std::pair<long, long>> quadratic_factor_solutions();

struct Alpha11Numeric {
  u64 p = 0;
  // x^11 + 11x^6 + x
  std::size_t printed_roots = 0;
  bool printed_rat2_fails_at_nonzero_roots = false;
  bool printed_discrepancy_matches = false;  // 15f''^2 - 22f'f''' = 72600 xi^8 at each root
  // x^11 + 11x^6 - x
  std::size_t corrected_roots = 0;
  bool corrected_rat2_everywhere = false;
  bool corrected_rat3_everywhere = false;
};

struct Alpha11Report {
  bool d_coefficients_ok = false;        // x^12 .. x^7 of the operator on the general f
  bool coefficient_factorizations_ok = false;   // all prime factors <= 11
  bool printed_factorizations_match = false;    // 27720 listed as 2^3*3*5*7*11 (it is 2^3*3^2*5*7*11)
  // The x^8 coefficient forces A6^2 = sign * 121 A1; the sign comes out -1.
  Rational x8_relation_sign;
  QPoly printed_residual{1};             // operator applied to x^11 + 11x^6 + x
  bool d_vanishes_ok = false;            // whether that residual is zero
  bool corrected_d_vanishes = false;     // operator kills x^11 + 11x^6 - x
  bool lhs_display_ok = false;           // 15 f''^2 = 1500*121 x^8 (x^5+3)^2
  bool rhs_display_ok = false;           // 22 f'f''' = 60*121 x^3 (11x^10+66x^5+1)(3x^5+4)
  bool reductions_ok = false;            // (x^5+3)^2 -> 8-5x^5, ... -> 125+1565x^5
  bool log_derivative_form_ok = false;   // expansion uses f'(xi) in the denominator
  // Printed chain 25(xi^5+3)^2 = (11xi^10+66xi^5+1)(3xi^5+4)
  Rational printed_coefficient;          // c in c xi^5 = e
  Rational printed_constant;             // e
  std::optional<Rational> printed_xi5;   // e / c
  // Same chain keeping the xi^5 factor: 25 xi^5 (xi^5+3)^2 = ...
  Rational direct_coefficient;
  Rational direct_constant;
  std::optional<Rational> direct_xi5;    // absent when the relation forces xi^5 = 0
  bool remainder_ok = false;             // 15f''^2 - 22f'f''' = 72600 x^8 mod (x^10+11x^5+1)
  bool corrected_chain_vanishes = false; // same difference is 0 mod (x^10+11x^5-1)
  std::optional<Alpha11Numeric> numeric;
};

/// The case alpha = 11, l = 6. If p is given (a prime > 121), the roots of
/// x^11 + 11x^6 + x and of x^11 + 11x^6 - x in F_p are also examined.
Alpha11Report alpha11_obstruction(std::optional<u64> p = std::nullopt);

/// Constants g0..g5 in Q[k][alpha]/(2 alpha^2 + 1), i.e. with d = -1/2.
struct GammaSymbolic {
  QQuadElem g0, g1, g2, g3, g4, g5;
};
GammaSymbolic gamma_symbolic();
/// Map an element to F_p with alpha -> root and k -> k. Throws if a
/// denominator vanishes mod p.
u64 quad_to_field(const QQuadElem& x, const Field& f, u64 root, u64 k);

struct QuadraticRelationReport {
  QQuadElem lhs;          // (1 - g1(alpha-1)/g0^2)(2/g0 - 1)^{-1}(2 g5 + g4)
  QQuadElem rhs;          // 2 g1 g2 - g4
  bool lhs_display_ok = false;
  bool rhs_display_ok = false;
  bool congruence_ok = false;      // 30(lhs - rhs) = (6k^2-10k+4)alpha + (k^2+5k+6)
  bool inverse_g0_ok = false;      // 1/g0 = 2 alpha + 1
  bool inverse_bracket_ok = false; // (2/g0 - 1)^{-1} = -4/9 alpha + 1/9
  bool degree7_display_ok = false; // expansion matches the printed degree 7 polynomial
  Rational degree7_value;          // its reduction; printed as -2/5
  bool ok() const {
    return lhs_display_ok && rhs_display_ok && congruence_ok && inverse_g0_ok &&
           inverse_bracket_ok && degree7_display_ok && degree7_value == Rational(-2, 5);
  }
};
QuadraticRelationReport quadratic_relation_symbolic();

struct CatalogEntry {
  std::string id;
  std::string description;
  bool ok = false;
  std::string detail;
};

/// Every remaining exact identity of the proofs, evaluated in parallel and
/// returned in a fixed order.
std::vector<CatalogEntry> identity_catalog();
std::vector<std::string> identity_catalog_ids();
/// Throws std::invalid_argument on an unknown id.
CatalogEntry identity_catalog_check(const std::string& id);

struct CenteredPowerSumReport {
  bool exempt = false;           // d in {2, 6}
  u64 p1 = 0, p2 = 0, p3 = 0;
  bool ratios_ok = false;        // p2 = p1^2/alpha, p3 = p1^3/alpha^2
  u64 centered_p2 = 0, centered_p3 = 0;
  bool centered_ok = false;        // centered p2 = p3 = 0
};

/// Requires (A, -A) d-critical (std::invalid_argument otherwise). For exempt
/// d the identities are still evaluated but not expected to hold.
CenteredPowerSumReport centered_power_sums(const FpSet& a, u64 d);

}  // namespace mucrit
