#include "mucrit/symm.hpp"

#include <stdexcept>

#include "mucrit/poly.hpp"

namespace mucrit {

std::vector<u64> power_sums(const FpSet& a, std::size_t max_k) {
  const Field& f = a.field();
  std::vector<u64> out(max_k + 1, 0);
  out[0] = f.reduce_u(a.size());
  for (u64 x : a) {
    u64 pw = 1;
    for (std::size_t k = 1; k <= max_k; ++k) {
      pw = f.mul(pw, x);
      out[k] = f.add(out[k], pw);
    }
  }
  return out;
}

std::vector<u64> complete_homogeneous_list(const FpSet& a, std::size_t max_k) {
  const Field& f = a.field();
  // prod (1 - a x), truncated, then invert the series.
  std::vector<u64> den(max_k + 1, 0);
  den[0] = 1;
  for (u64 x : a) {
    for (std::size_t k = max_k; k >= 1; --k) den[k] = f.sub(den[k], f.mul(x, den[k - 1]));
  }
  std::vector<u64> h(max_k + 1, 0);
  h[0] = 1;
  for (std::size_t k = 1; k <= max_k; ++k) {
    u64 s = 0;
    for (std::size_t j = 1; j <= k; ++j) s = f.add(s, f.mul(den[j], h[k - j]));
    h[k] = f.neg(s);
  }
  return h;
}

u64 complete_homogeneous(const FpSet& a, std::size_t m) {
  return complete_homogeneous_list(a, m)[m];
}

std::vector<u64> elementary_symmetric(const FpSet& a) {
  const Field& f = a.field();
  const FpPoly g = from_roots(a);
  const std::size_t n = a.size();
  std::vector<u64> e(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    u64 c = g.coeff(n - k);
    e[k] = (k % 2 == 0) ? c : f.neg(c);
  }
  return e;
}

std::vector<u64> newton_convert(const Field& f, const std::vector<u64>& in, NewtonDirection dir) {
  const std::size_t kmax = in.empty() ? 0 : in.size() - 1;
  for (std::size_t k = 1; k <= kmax; ++k) {
    if (k % f.modulus() == 0) {
      throw std::domain_error("Newton conversion needs " + std::to_string(k) +
                              " to be invertible mod " + std::to_string(f.modulus()));
    }
  }
  std::vector<u64> out(in.size(), 0);
  if (in.empty()) return out;
  switch (dir) {
    case NewtonDirection::PowerToElementary:
      // k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} p_i
      out[0] = 1;
      for (std::size_t k = 1; k <= kmax; ++k) {
        u64 s = 0;
        for (std::size_t i = 1; i <= k; ++i) {
          u64 t = f.mul(out[k - i], in[i]);
          s = (i % 2 == 1) ? f.add(s, t) : f.sub(s, t);
        }
        out[k] = f.div(s, k);
      }
      break;
    case NewtonDirection::PowerToComplete:
      // k h_k = sum_{i=1}^k h_{k-i} p_i
      out[0] = 1;
      for (std::size_t k = 1; k <= kmax; ++k) {
        u64 s = 0;
        for (std::size_t i = 1; i <= k; ++i) s = f.add(s, f.mul(out[k - i], in[i]));
        out[k] = f.div(s, k);
      }
      break;
    case NewtonDirection::ElementaryToPower:
      // p_k = sum_{i=1}^{k-1} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k
      for (std::size_t k = 1; k <= kmax; ++k) {
        u64 s = 0;
        for (std::size_t i = 1; i < k; ++i) {
          u64 t = f.mul(in[i], out[k - i]);
          s = (i % 2 == 1) ? f.add(s, t) : f.sub(s, t);
        }
        u64 last = f.mul(f.reduce_u(k), in[k]);
        out[k] = (k % 2 == 1) ? f.add(s, last) : f.sub(s, last);
      }
      break;
  }
  return out;
}

MinimalIndices minimal_indices(const FpSet& a) {
  const std::size_t alpha = a.size();
  if (alpha < 1 || alpha >= a.modulus()) {
    throw std::invalid_argument("minimal_indices requires 1 <= |A| < p");
  }
  const auto ps = power_sums(a, alpha);
  MinimalIndices out;
  for (std::size_t k = 1; k <= alpha; ++k) {
    if (ps[k] != 0) {
      out.n = k;
      break;
    }
  }
  if (out.n == 0) throw std::logic_error("no nonzero power sum up to |A|");
  for (std::size_t k = out.n + 1; k <= alpha; ++k) {
    if (ps[k] != 0 && k % out.n != 0) {
      out.m = k;
      break;
    }
  }
  return out;
}

SymProfile sym_profile(const FpSet& a, std::optional<std::size_t> max_k) {
  const std::size_t k = max_k.value_or(a.size());
  SymProfile s{a, power_sums(a, k), elementary_symmetric(a), complete_homogeneous_list(a, k), {}};
  if (!a.empty() && a.size() < a.modulus()) s.indices = minimal_indices(a);
  return s;
}

}  // namespace mucrit
