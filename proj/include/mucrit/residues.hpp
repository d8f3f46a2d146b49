#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mucrit/fp.hpp"
#include "mucrit/poly.hpp"

namespace mucrit {

/// (num / den) dx on the projective line over F_p, reduced by gcd with a
/// monic denominator.
class RationalForm {
 public:
  /// Throws std::domain_error on a zero denominator.
  RationalForm(FpPoly num, FpPoly den);

  const Field& field() const noexcept { return num_.field(); }
  const FpPoly& numerator() const noexcept { return num_; }
  const FpPoly& denominator() const noexcept { return den_; }

 private:
  FpPoly num_;
  FpPoly den_;
};

/// Coefficient of 1/(x - point) in the Laurent expansion; zero away from poles.
u64 residue_at(const RationalForm& form, u64 point);
/// Minus the coefficient of 1/x in the expansion at infinity.
u64 residue_at_infinity(const RationalForm& form);

struct ResidueTable {
  std::vector<std::pair<u64, u64>> finite;  // (pole, residue), poles ascending
  u64 at_infinity = 0;
  u64 total = 0;
  bool denominator_splits = false;  // every pole is rational
};

ResidueTable residue_table(const RationalForm& form);

enum class ResidueSum { Zero, Nonzero, Inconclusive };
const char* to_string(ResidueSum s);

/// Zero or Nonzero when the denominator splits over F_p, Inconclusive otherwise.
ResidueSum sum_residues_check(const RationalForm& form);

/// With g = prod_{b in B}(x - b) and h = prod_{a in A}(x + a):
///   Omega20: x^{k+1} (g'/g)^2          Omega11: x^{k+1} (g'/g)(h'/h)
///   Omega30: x^{k+2} (g'/g)^3          Psi:     x^{k+2} (g'/g)' (h'/h)
///   Omega21: x^{k+2} (g'/g)^2 (h'/h)
enum class FormKind { Omega20, Omega11, Omega30, Psi, Omega21 };
const char* to_string(FormKind k);
std::optional<FormKind> form_kind_from_string(const std::string& s);

/// Builds the form exactly. A is ignored for Omega20 and Omega30.
RationalForm make_form(FormKind kind, const FpSet& a, const FpSet& b, unsigned k);

enum class IdentityMode { General, Specialized };

struct FormIdentityReport {
  FormKind kind = FormKind::Omega20;
  IdentityMode mode = IdentityMode::General;
  unsigned k = 0;
  u64 lhs = 0;
  u64 rhs = 0;
  bool ok = false;
  /// General mode: the closed-form residues agree with the engine at every
  /// pole and at infinity.
  bool engine_ok = false;
  bool hypotheses_ok = true;
  std::string hypothesis_failure;
};

/// General mode checks the raw residue-sum identity for any inputs:
///   Omega20: sum_b [(k+1)b^k + 2b^{k+1}S1(b)] = sum_{r+s=k} p_r(B)p_s(B)
///   Omega11: sum_b b^{k+1}H1(b) + (-1)^k sum_a a^{k+1} K1(a)
///            = sum_{r+s=k} (-1)^r p_r(A) p_s(B)
///   Omega30, Psi, Omega21: finite closed-form residues against minus the
///   closed-form residue at infinity.
/// Here S_j(b) = sum_{b' != b} (b-b')^{-j}, H_j(b) = sum_a (a+b)^{-j} and
/// K_j(a) = sum_b (a+b)^{-j}.
///
/// Specialized mode checks the reduced identity that holds once the power-sum
/// cross terms vanish (k >= 1). Psi and Omega21 further need d, |A| = |B|, k
/// even, p_k(A) = -p_k(B) and sum_a 1/(a+b) = g0 S1(b) at every b.
/// Hypothesis violations are reported, not thrown.
FormIdentityReport lemma_form_identity(FormKind kind, const FpSet& a, const FpSet& b, unsigned k,
                                       IdentityMode mode, std::optional<u64> d = std::nullopt);

struct RandomSuiteSummary {
  std::size_t instances = 0;
  std::size_t passed = 0;
  std::vector<std::size_t> failures;  // instance indices, ascending
};

/// Random split-denominator forms; instance i draws from a generator seeded
/// by (seed, i), so the outcome does not depend on the schedule.
RandomSuiteSummary random_residue_suite(u64 p, std::size_t count, u64 seed);
RandomSuiteSummary random_residue_suite_serial(u64 p, std::size_t count, u64 seed);

/// General-mode identities of one form on random (A, B, k); both the closed
/// identity and the engine cross-check must pass.
RandomSuiteSummary random_identity_suite(FormKind kind, u64 p, std::size_t count, u64 seed);
RandomSuiteSummary random_identity_suite_serial(FormKind kind, u64 p, std::size_t count, u64 seed);

}  // namespace mucrit
