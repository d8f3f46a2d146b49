#pragma once

#include <string>
#include <vector>

#include "mucrit/fp.hpp"
#include "mucrit/search.hpp"

namespace mucrit {

struct Check {
  std::string label;
  bool ok = false;
  std::string detail;

  bool operator==(const Check&) const = default;
};

/// A named bundle of checks. Contents never depend on timing or on the
/// number of threads, so the JSON form is reproducible.
struct CheckReport {
  std::string name;
  std::vector<Check> checks;

  bool ok() const;
  std::vector<std::string> failed_labels() const;
  void add(std::string label, bool ok, std::string detail = {});
};

std::string to_json(const CheckReport& r);
std::string to_text(const CheckReport& r);
std::string to_csv(const CheckReport& r);

/// A = {0,1,9,32,40} in F_41 with d = 20.
CheckReport verify_f41();
/// Prime count and hits of levson_scan(alpha_max) against (13,3,3), (41,5,5).
/// The raw scan is returned through `scan` when given.
CheckReport verify_levson(u64 alpha_max = 3000, bool parallel = true, SearchResult* scan = nullptr);
/// The exact symbolic identities.
CheckReport verify_identities();
/// The operator on random local models, the degree five normal form and the
/// degree eleven case.
CheckReport verify_operator(u64 seed);
/// Residue sums on random forms and the general identities of all five forms.
CheckReport verify_residues(u64 seed);

struct DeskScaleBounds {
  u64 sumset_p = 61;
  u64 diffset_p = 200;
  u64 threefold_p = 61;
};
/// Exhaustive small-prime sweeps: quadratic residues never split as A + B,
/// every mu_d = A + B has |A| = |B|, exact difference sets only at d = 2, 6,
/// and no three-fold splits.
CheckReport verify_desk_scale(const DeskScaleBounds& bounds = {});
/// HP coefficients by formula against elimination, and complete homogeneous
/// values against moment sums, on random sets.
CheckReport verify_hp_oracles(u64 seed, std::size_t coeff_sets = 500, std::size_t h_sets = 200);

/// Focused checks for the numbered statements 1..17 of the HP / critical pair
/// argument. Throws std::invalid_argument for other numbers.
CheckReport verify_lemma(int number, u64 seed);

}  // namespace mucrit
