#pragma once

#include <optional>
#include <vector>

#include "mucrit/fp.hpp"

namespace mucrit {

/// [p_0, ..., p_K] with p_0 = |A| mod p.
std::vector<u64> power_sums(const FpSet& a, std::size_t max_k);

/// [h_0, ..., h_K] read off the series 1 / prod_{a}(1 - a x).
std::vector<u64> complete_homogeneous_list(const FpSet& a, std::size_t max_k);
u64 complete_homogeneous(const FpSet& a, std::size_t m);

/// [e_0, ..., e_|A|]. Sign convention: from_roots(A) = sum_k (-1)^k e_k x^{|A|-k}.
std::vector<u64> elementary_symmetric(const FpSet& a);

enum class NewtonDirection { PowerToElementary, PowerToComplete, ElementaryToPower };

/// Newton's identities on index-aligned lists (entry k is the degree-k value).
/// Entry 0 of an output e- or h-list is 1. For ElementaryToPower the output
/// entry 0 is not determined by the e-list and is left 0.
/// Throws std::domain_error when some k in [1, K] is divisible by p.
std::vector<u64> newton_convert(const Field& f, const std::vector<u64>& in,
                                NewtonDirection dir);

struct MinimalIndices {
  std::size_t n = 0;
  std::optional<std::size_t> m;
};

/// n: least k > 0 with p_k != 0; m: least k <= |A| with p_k != 0 and n not
/// dividing k. Requires 1 <= |A| < p.
MinimalIndices minimal_indices(const FpSet& a);

struct SymProfile {
  FpSet set;
  std::vector<u64> p;
  std::vector<u64> e;
  std::vector<u64> h;
  MinimalIndices indices;
};

/// Bundles the above with K defaulting to |A|.
SymProfile sym_profile(const FpSet& a, std::optional<std::size_t> max_k = std::nullopt);

}  // namespace mucrit
