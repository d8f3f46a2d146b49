#pragma once

#include <map>
#include <string>
#include <vector>

#include "mucrit/fp.hpp"

namespace mucrit {

enum class SearchKind { Diffset, Sumset, Threefold, Levson, Problem1, Problem2 };

std::string to_string(SearchKind k);
/// Throws std::invalid_argument on an unknown name.
SearchKind search_kind_from_string(const std::string& s);

/// What was asked. Only the fields relevant to the kind are meaningful;
/// the rest stay 0. A "target" run carries the target set instead of d.
struct SearchJob {
  SearchKind kind = SearchKind::Diffset;
  u64 p = 0;
  u64 d = 0;
  u64 alpha = 0;       // set size (problem2, target diffset)
  u64 alpha_max = 0;   // levson, problem1
  std::vector<u64> target;

  bool operator==(const SearchJob&) const = default;
};

/// One canonical representative. `sets` holds one set for diffset and the
/// problem scans, a pair for sumset, a triple for threefold; levson hits
/// carry no sets. `info` holds per-kind facts as strings.
struct Witness {
  std::vector<std::vector<u64>> sets;
  std::map<std::string, std::string> info;

  bool operator==(const Witness&) const = default;
  auto operator<=>(const Witness& o) const { return sets <=> o.sets; }
};

struct SearchResult {
  SearchJob job;
  std::vector<Witness> witnesses;  // sorted, deterministic
  u64 examined = 0;                // search nodes (or congruences) visited
  u64 pruned = 0;                  // branches cut
  u64 primes_scanned = 0;          // levson only
  bool exhausted = false;          // node budget ran out; absence is then unproven
  std::string verdict;             // "found", "none" or "exhausted"
  std::vector<std::string> notes;

  bool operator==(const SearchResult&) const = default;
};

struct SearchOptions {
  bool parallel = true;
  /// Per top-level branch; 0 means unlimited.
  u64 node_budget = 0;
  /// Largest p accepted by the exhaustive set searches; 0 picks the default
  /// (10^4 for diffset, 128 for sumset/threefold/problem scans).
  u64 p_bound = 0;
};

/// A with A - A inside mu_d with 0 and |A|(|A|-1) = d, up to translations and
/// scalings by mu_d. info["exact"] tells whether A - A is all of mu_d with 0.
/// Requires p prime, d | p-1 and 1 < d < p-1.
SearchResult diffset_search(u64 p, u64 d, const SearchOptions& opt = {});
/// Same search against an arbitrary target: |A| = size, 0 in A and every
/// nonzero difference in target. Up to translation only.
SearchResult diffset_search_target(u64 p, const std::vector<u64>& target, std::size_t size,
                                   const SearchOptions& opt = {});
/// Lexicographically least sorted c(A - a0) over a0 in A and c in mu_d.
std::vector<u64> canonical_diffset(const FpSet& a, u64 d);

/// Pairs (A, B), |A|, |B| > 1, with A + B = mu_d exactly, up to
/// (A + t, B - t), scaling by mu_d and swapping. Each witness records the
/// minimal power-sum indices of both sets after recentering.
SearchResult sumset_search(u64 p, u64 d, const SearchOptions& opt = {});
/// A + B = target exactly, up to (A + t, B - t) and swapping.
SearchResult sumset_search_target(u64 p, const std::vector<u64>& target,
                                  const SearchOptions& opt = {});

/// A + B + C = mu_d with all sizes > 1. Any such triple makes (A + B, C) a
/// two-fold witness, so this tries to split each side of every two-fold one.
SearchResult threefold_check(u64 p, u64 d, const SearchOptions& opt = {});
SearchResult threefold_check_target(u64 p, const std::vector<u64>& target,
                                    const SearchOptions& opt = {});

/// For alpha <= alpha_max with p = 2 alpha(alpha-1) + 1 prime, tests
/// C(alpha^2-1, n-1+alpha) = (-1)^{n-1} C(alpha^2-1, alpha) mod p for
/// 1 < n <= alpha. Hits are witnesses with info p, alpha, n.
SearchResult levson_scan(u64 alpha_max, const SearchOptions& opt = {});

/// All A with 2 <= |A| <= alpha_max satisfying rat2 at every point, up to
/// affine maps. Sizes divisible by p are skipped.
SearchResult problem1_scan(u64 p, u64 alpha_max, const SearchOptions& opt = {});
/// All A of size alpha with prod_{a' != a} (a - a')^alpha = -1 for every a,
/// up to translation and the scalings that preserve the condition.
SearchResult problem2_scan(u64 p, u64 alpha, const SearchOptions& opt = {});

/// Field elements and counters are written as decimal strings next to the
/// modulus; the top-level "schema" key is "mucrit/1".
std::string to_json(const SearchResult& r);
/// Inverse of to_json; throws std::invalid_argument on a malformed document.
SearchResult search_result_from_json(const std::string& text);
std::string to_csv(const SearchResult& r);
std::string to_text(const SearchResult& r);

}  // namespace mucrit
