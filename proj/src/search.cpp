#include "mucrit/search.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "mucrit/hp.hpp"
#include "mucrit/stepanov.hpp"
#include "mucrit/symm.hpp"

namespace mucrit {

std::string to_string(SearchKind k) {
  switch (k) {
    case SearchKind::Diffset: return "diffset";
    case SearchKind::Sumset: return "sumset";
    case SearchKind::Threefold: return "threefold";
    case SearchKind::Levson: return "levson";
    case SearchKind::Problem1: return "problem1";
    case SearchKind::Problem2: return "problem2";
  }
  return "?";
}

SearchKind search_kind_from_string(const std::string& s) {
  for (auto k : {SearchKind::Diffset, SearchKind::Sumset, SearchKind::Threefold, SearchKind::Levson,
                 SearchKind::Problem1, SearchKind::Problem2})
    if (to_string(k) == s) return k;
  throw std::invalid_argument("unknown search kind: " + s);
}

namespace {

constexpr u64 kDiffsetBound = 10000;
constexpr u64 kSmallBound = 128;

/// Fixed-width bitset sized at runtime.
class Bits {
 public:
  explicit Bits(std::size_t n = 0) : n_(n), w_((n + 63) / 64, 0) {}
  std::size_t size() const { return n_; }
  void set(std::size_t i) { w_[i >> 6] |= 1ULL << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(1ULL << (i & 63)); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  std::size_t count() const {
    std::size_t c = 0;
    for (u64 x : w_) c += static_cast<std::size_t>(__builtin_popcountll(x));
    return c;
  }
  Bits& operator&=(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bits& operator|=(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  bool operator==(const Bits&) const = default;
  /// First set index >= from, or size() if none.
  std::size_t next(std::size_t from) const {
    if (from >= n_) return n_;
    std::size_t wi = from >> 6;
    u64 x = w_[wi] & (~0ULL << (from & 63));
    while (true) {
      if (x) return std::min(n_, (wi << 6) + static_cast<std::size_t>(__builtin_ctzll(x)));
      if (++wi >= w_.size()) return n_;
      x = w_[wi];
    }
  }

 private:
  std::size_t n_;
  std::vector<u64> w_;
};

Bits bits_of(u64 p, const std::vector<u64>& xs) {
  Bits b(p);
  for (u64 x : xs) b.set(x);
  return b;
}

/// Per-branch bookkeeping; summed in branch order afterwards.
struct Tally {
  u64 examined = 0;
  u64 pruned = 0;
  bool exhausted = false;
  std::vector<Witness> found;
};

bool over_budget(Tally& t, u64 budget) {
  if (budget != 0 && t.examined > budget) t.exhausted = true;
  return t.exhausted;
}

/// Runs body(i, tally) for every branch, in parallel if asked, and folds the
/// tallies back in index order so the outcome never depends on scheduling.
template <class Body>
Tally run_branches(std::size_t n, bool parallel, Body body) {
  std::vector<Tally> parts(n);
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (long i = 0; i < count; ++i) body(static_cast<std::size_t>(i), parts[i]);
  Tally out;
  for (auto& t : parts) {
    out.examined += t.examined;
    out.pruned += t.pruned;
    out.exhausted = out.exhausted || t.exhausted;
    for (auto& w : t.found) out.found.push_back(std::move(w));
  }
  return out;
}

void dedupe(std::vector<Witness>& ws) {
  std::sort(ws.begin(), ws.end(), [](const Witness& a, const Witness& b) { return a.sets < b.sets; });
  ws.erase(std::unique(ws.begin(), ws.end(),
                       [](const Witness& a, const Witness& b) { return a.sets == b.sets; }),
           ws.end());
}

void finish(SearchResult& r, Tally&& t) {
  r.examined = t.examined;
  r.pruned = t.pruned;
  r.exhausted = t.exhausted;
  r.witnesses = std::move(t.found);
  dedupe(r.witnesses);
  r.verdict = r.exhausted ? "exhausted" : (r.witnesses.empty() ? "none" : "found");
}

void require_prime_field(u64 p, u64 bound) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime");
  if (p > bound) {
    throw std::invalid_argument("p = " + std::to_string(p) + " exceeds the search bound " +
                                std::to_string(bound));
  }
}

void require_subgroup(u64 p, u64 d) {
  if (d <= 1 || d >= p - 1 || (p - 1) % d != 0) {
    throw std::invalid_argument("need d | p-1 and 1 < d < p-1 (p = " + std::to_string(p) +
                                ", d = " + std::to_string(d) + ")");
  }
}

std::vector<u64> target_list(u64 p, const std::vector<u64>& target) {
  std::vector<u64> t;
  for (u64 x : target) t.push_back(x % p);
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  return t;
}

/// Least sorted image of A under x -> c(x - a0), a0 in A, c in scalars.
std::vector<u64> canonical_affine(const Field& f, const std::vector<u64>& a,
                                  const std::vector<u64>& scalars) {
  std::vector<u64> best, cur(a.size());
  for (u64 a0 : a) {
    for (u64 c : scalars) {
      for (std::size_t i = 0; i < a.size(); ++i) cur[i] = f.mul(c, f.sub(a[i], a0));
      std::sort(cur.begin(), cur.end());
      if (best.empty() || cur < best) best = cur;
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// cliques: sets containing `base` whose pairwise differences lie in T

struct CliqueSpace {
  std::vector<u64> cand;
  std::vector<Bits> adj;  // over candidate indices
};

CliqueSpace clique_space(const Field& f, const Bits& t, const std::vector<u64>& base) {
  const u64 p = f.modulus();
  auto diff_ok = [&](u64 x, u64 y) { return t.test(f.sub(x, y)) && t.test(f.sub(y, x)); };
  CliqueSpace cs;
  for (u64 x = 0; x < p; ++x) {
    if (std::find(base.begin(), base.end(), x) != base.end()) continue;
    if (std::all_of(base.begin(), base.end(), [&](u64 b) { return diff_ok(x, b); })) cs.cand.push_back(x);
  }
  const std::size_t n = cs.cand.size();
  cs.adj.assign(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && diff_ok(cs.cand[i], cs.cand[j])) cs.adj[i].set(j);
  return cs;
}

template <class Emit>
void clique_dfs(const CliqueSpace& cs, std::vector<u64>& chosen, Bits open, std::size_t need,
                Tally& t, u64 budget, Emit& emit) {
  ++t.examined;
  if (over_budget(t, budget)) return;
  if (chosen.size() == need) {
    emit(chosen, t);
    return;
  }
  if (chosen.size() + open.count() < need) {
    ++t.pruned;
    return;
  }
  for (std::size_t j = open.next(0); j < open.size(); j = open.next(j + 1)) {
    open.reset(j);
    chosen.push_back(cs.cand[j]);
    clique_dfs(cs, chosen, open & cs.adj[j], need, t, budget, emit);
    chosen.pop_back();
    if (t.exhausted) return;
  }
}

/// All cliques of `need` candidates, branch = smallest candidate index.
template <class Emit>
Tally all_cliques(const CliqueSpace& cs, std::size_t need, const SearchOptions& opt, Emit emit) {
  if (need == 0) {
    Tally t;
    t.examined = 1;
    std::vector<u64> none;
    emit(none, t);
    return t;
  }
  const std::size_t n = cs.cand.size();
  return run_branches(n, opt.parallel, [&](std::size_t i, Tally& t) {
    Bits open = cs.adj[i];
    for (std::size_t j = open.next(0); j <= i && j < n; j = open.next(j + 1)) open.reset(j);
    std::vector<u64> chosen{cs.cand[i]};
    clique_dfs(cs, chosen, open, need, t, opt.node_budget, emit);
  });
}

std::vector<u64> with_base(const std::vector<u64>& base, const std::vector<u64>& extra) {
  std::vector<u64> a = base;
  a.insert(a.end(), extra.begin(), extra.end());
  std::sort(a.begin(), a.end());
  return a;
}

// ---------------------------------------------------------------------------
// two-fold sums

struct SumsetSpace {
  u64 p;
  Bits target;
  std::vector<u64> tlist;
  bool fix_one;               // 1 in B (scaling normalized away)
  std::vector<u64> cand;      // possible nonzero elements of A
  std::vector<Bits> shifted;  // target - cand[i]
};

SumsetSpace sumset_space(const Field& f, const std::vector<u64>& tlist, bool fix_one) {
  const u64 p = f.modulus();
  SumsetSpace s{p, bits_of(p, tlist), tlist, fix_one, {}, {}};
  for (u64 x = 1; x < p; ++x) {
    Bits sh(p);
    for (u64 t : tlist) sh.set(f.sub(t, x));
    Bits both = sh & s.target;
    if (both.count() < 2) continue;
    if (fix_one && !both.test(1)) continue;
    s.cand.push_back(x);
    s.shifted.push_back(std::move(sh));
  }
  return s;
}

/// Every B inside bmax with |B| >= 2 and A + B = target.
void enumerate_b(const Field& f, const SumsetSpace& s, const std::vector<u64>& a, const Bits& bmax,
                 Tally& t, std::vector<std::pair<std::vector<u64>, std::vector<u64>>>& out) {
  std::vector<u64> list;
  for (std::size_t b = bmax.next(0); b < bmax.size(); b = bmax.next(b + 1)) list.push_back(b);
  // 1 goes first when forced
  if (s.fix_one) {
    std::stable_partition(list.begin(), list.end(), [](u64 b) { return b == 1; });
  }
  const std::size_t m = list.size(), nt = s.tlist.size();
  std::vector<Bits> cover(m, Bits(nt));
  for (std::size_t i = 0; i < m; ++i)
    for (u64 x : a) {
      const u64 sum = f.add(x, list[i]);
      const auto it = std::lower_bound(s.tlist.begin(), s.tlist.end(), sum);
      cover[i].set(static_cast<std::size_t>(it - s.tlist.begin()));
    }
  std::vector<Bits> suffix(m + 1, Bits(nt));
  for (std::size_t i = m; i-- > 0;) {
    suffix[i] = suffix[i + 1];
    suffix[i] |= cover[i];
  }
  Bits full(nt);
  for (std::size_t i = 0; i < nt; ++i) full.set(i);
  std::vector<u64> chosen;
  auto rec = [&](auto&& self, std::size_t i, const Bits& got) -> void {
    ++t.examined;
    Bits reach = got;
    reach |= suffix[i];
    if (!(reach == full)) {
      ++t.pruned;
      return;
    }
    if (i == m) {
      if (chosen.size() >= 2) out.emplace_back(a, chosen);
      return;
    }
    chosen.push_back(list[i]);
    Bits g2 = got;
    g2 |= cover[i];
    self(self, i + 1, g2);
    chosen.pop_back();
    if (!(s.fix_one && i == 0)) self(self, i + 1, got);
  };
  rec(rec, 0, Bits(nt));
}

void sumset_dfs(const Field& f, const SumsetSpace& s, std::vector<u64>& a, const Bits& bmax,
                std::size_t start, Tally& t, u64 budget,
                std::vector<std::pair<std::vector<u64>, std::vector<u64>>>& out) {
  ++t.examined;
  if (over_budget(t, budget)) return;
  // A + bmax lies in the target; it has to be all of it for some B to work
  bool covered = true;
  for (u64 x : s.tlist) {
    bool hit = false;
    for (u64 y : a)
      if (bmax.test(f.sub(x, y))) {
        hit = true;
        break;
      }
    if (!hit) {
      covered = false;
      break;
    }
  }
  if (covered) enumerate_b(f, s, a, bmax, t, out);
  for (std::size_t j = start; j < s.cand.size(); ++j) {
    Bits next = bmax & s.shifted[j];
    if (next.count() < 2) {
      ++t.pruned;
      continue;
    }
    a.push_back(s.cand[j]);
    sumset_dfs(f, s, a, next, j + 1, t, budget, out);
    a.pop_back();
    if (t.exhausted) return;
  }
}

using Pair = std::pair<std::vector<u64>, std::vector<u64>>;

/// Least (X, Y) over swaps, x0 in X moved to 0 with Y moved the other way,
/// then (when scaled) y0 in Y moved to 1.
Pair canonical_pair(const Field& f, const Pair& ab, bool scaled) {
  Pair best;
  bool have = false;
  for (int swap = 0; swap < 2; ++swap) {
    const auto& x = swap ? ab.second : ab.first;
    const auto& y = swap ? ab.first : ab.second;
    for (u64 x0 : x) {
      std::vector<u64> xs, ys;
      for (u64 v : x) xs.push_back(f.sub(v, x0));
      for (u64 v : y) ys.push_back(f.add(v, x0));
      std::vector<u64> scal{1};
      if (scaled) {
        scal.clear();
        for (u64 y0 : ys) scal.push_back(f.inv(y0));
      }
      for (u64 c : scal) {
        Pair cur;
        for (u64 v : xs) cur.first.push_back(f.mul(c, v));
        for (u64 v : ys) cur.second.push_back(f.mul(c, v));
        std::sort(cur.first.begin(), cur.first.end());
        std::sort(cur.second.begin(), cur.second.end());
        if (!have || cur < best) {
          best = cur;
          have = true;
        }
      }
    }
  }
  return best;
}

Tally sumset_core(const Field& f, const std::vector<u64>& tlist, bool fix_one, const SearchOptions& opt) {
  const SumsetSpace s = sumset_space(f, tlist, fix_one);
  return run_branches(s.cand.size(), opt.parallel, [&](std::size_t i, Tally& t) {
    Bits bmax = s.target & s.shifted[i];
    std::vector<u64> a{0, s.cand[i]};
    std::vector<Pair> raw;
    sumset_dfs(f, s, a, bmax, i + 1, t, opt.node_budget, raw);
    for (const auto& ab : raw) {
      Witness w;
      const Pair c = canonical_pair(f, ab, fix_one);
      w.sets = {c.first, c.second};
      t.found.push_back(std::move(w));
    }
  });
}

/// Re-verifies a two-fold witness against the target.
bool verify_pair(const Field& f, const Witness& w, const std::vector<u64>& tlist) {
  const FpSet a = FpSet::from_canonical(f, w.sets[0]), b = FpSet::from_canonical(f, w.sets[1]);
  return a.size() > 1 && b.size() > 1 && a.sumset(b).values() == tlist;
}

std::string index_string(const std::optional<std::size_t>& v) {
  return v ? std::to_string(*v) : std::string("none");
}

/// Minimal power-sum indices after moving A by t = -p1(A)/|A| and B by -t.
void record_indices(const Field& f, Witness& w) {
  const FpSet a = FpSet::from_canonical(f, w.sets[0]), b = FpSet::from_canonical(f, w.sets[1]);
  const u64 alpha = f.reduce_u(a.size());
  if (alpha == 0) return;
  const u64 shift = f.neg(f.div(power_sums(a, 1)[1], alpha));
  bool even = true;
  auto put = [&](const std::string& tag, const FpSet& s) {
    try {
      const auto mi = minimal_indices(s);
      w.info["n_" + tag] = std::to_string(mi.n);
      w.info["m_" + tag] = index_string(mi.m);
      even = even && mi.n % 2 == 0 && (!mi.m || *mi.m % 2 == 0);
    } catch (const std::logic_error&) {
      w.info["n_" + tag] = "none";
      w.info["m_" + tag] = "none";
    }
  };
  put("a", a.shifted(shift));
  put("b", b.shifted(f.neg(shift)));
  w.info["indices_even"] = even ? "true" : "false";
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<u64> canonical_diffset(const FpSet& a, u64 d) {
  return canonical_affine(a.field(), a.values(), roots_of_unity(a.field(), d).values());
}

SearchResult diffset_search(u64 p, u64 d, const SearchOptions& opt) {
  require_prime_field(p, opt.p_bound ? opt.p_bound : kDiffsetBound);
  require_subgroup(p, d);
  const Field f(p);
  SearchResult r;
  r.job.kind = SearchKind::Diffset;
  r.job.p = p;
  r.job.d = d;
  u64 alpha = 2;
  while (alpha * (alpha - 1) < d) ++alpha;
  if (alpha * (alpha - 1) != d) {
    r.notes.push_back("d is not of the form a(a-1); nothing to search");
    r.verdict = "none";
    return r;
  }
  r.job.alpha = alpha;
  const FpSet mu = roots_of_unity(f, d);
  const Bits t = bits_of(p, mu.values());
  // translate one element to 0, scale another to 1
  const std::vector<u64> base{0, 1};
  const CliqueSpace cs = clique_space(f, t, base);
  Tally tally = all_cliques(cs, alpha - 2, opt, [&](const std::vector<u64>& extra, Tally& tl) {
    Witness w;
    w.sets = {canonical_affine(f, with_base(base, extra), mu.values())};
    tl.found.push_back(std::move(w));
  });
  finish(r, std::move(tally));
  for (auto& w : r.witnesses) {
    const FpSet a = FpSet::from_canonical(f, w.sets[0]);
    if (!criticality(a, a.negated(), d).critical) throw std::logic_error("diffset witness failed re-verification");
    w.info["exact"] = a.difference_set(a).size() == d + 1 ? "true" : "false";
  }
  return r;
}

SearchResult diffset_search_target(u64 p, const std::vector<u64>& target, std::size_t size,
                                   const SearchOptions& opt) {
  require_prime_field(p, opt.p_bound ? opt.p_bound : kDiffsetBound);
  if (size < 2) throw std::invalid_argument("size must be at least 2");
  const Field f(p);
  SearchResult r;
  r.job.kind = SearchKind::Diffset;
  r.job.p = p;
  r.job.alpha = size;
  r.job.target = target_list(p, target);
  const Bits t = bits_of(p, r.job.target);
  const std::vector<u64> base{0};
  const CliqueSpace cs = clique_space(f, t, base);
  Tally tally = all_cliques(cs, size - 1, opt, [&](const std::vector<u64>& extra, Tally& tl) {
    Witness w;
    w.sets = {canonical_affine(f, with_base(base, extra), {1})};
    tl.found.push_back(std::move(w));
  });
  finish(r, std::move(tally));
  for (auto& w : r.witnesses) {
    const FpSet a = FpSet::from_canonical(f, w.sets[0]);
    std::vector<u64> diffs;
    for (u64 x : a.difference_set(a))
      if (x != 0) diffs.push_back(x);
    if (!std::includes(r.job.target.begin(), r.job.target.end(), diffs.begin(), diffs.end())) {
      throw std::logic_error("target diffset witness failed re-verification");
    }
    std::vector<u64> nonzero_target;
    for (u64 x : r.job.target)
      if (x != 0) nonzero_target.push_back(x);
    w.info["exact"] = diffs == nonzero_target ? "true" : "false";
  }
  return r;
}

SearchResult sumset_search(u64 p, u64 d, const SearchOptions& opt) {
  require_prime_field(p, opt.p_bound ? opt.p_bound : kSmallBound);
  require_subgroup(p, d);
  const Field f(p);
  SearchResult r;
  r.job.kind = SearchKind::Sumset;
  r.job.p = p;
  r.job.d = d;
  const FpSet mu = roots_of_unity(f, d);
  finish(r, sumset_core(f, mu.values(), true, opt));
  for (auto& w : r.witnesses) {
    const FpSet a = FpSet::from_canonical(f, w.sets[0]), b = FpSet::from_canonical(f, w.sets[1]);
    if (!verify_pair(f, w, mu.values()) || !criticality(a, b, d).sumset_equals_mu) {
      throw std::logic_error("sumset witness failed re-verification");
    }
    w.info["sizes"] = std::to_string(a.size()) + "x" + std::to_string(b.size());
    record_indices(f, w);
  }
  return r;
}

SearchResult sumset_search_target(u64 p, const std::vector<u64>& target, const SearchOptions& opt) {
  require_prime_field(p, opt.p_bound ? opt.p_bound : kSmallBound);
  const Field f(p);
  SearchResult r;
  r.job.kind = SearchKind::Sumset;
  r.job.p = p;
  r.job.target = target_list(p, target);
  finish(r, sumset_core(f, r.job.target, false, opt));
  for (auto& w : r.witnesses) {
    if (!verify_pair(f, w, r.job.target)) throw std::logic_error("sumset witness failed re-verification");
    w.info["sizes"] = std::to_string(w.sets[0].size()) + "x" + std::to_string(w.sets[1].size());
  }
  return r;
}

namespace {

/// Tries to split either side of every two-fold witness into a sum.
SearchResult split_sides(const Field& f, SearchResult two, const std::vector<u64>& tlist,
                         const SearchOptions& opt) {
  SearchResult r;
  r.job = two.job;
  r.job.kind = SearchKind::Threefold;
  r.notes.push_back(std::to_string(two.witnesses.size()) + " two-fold witnesses examined");
  SearchOptions inner = opt;
  inner.parallel = false;
  inner.p_bound = f.modulus();
  Tally tally = run_branches(two.witnesses.size(), opt.parallel, [&](std::size_t i, Tally& t) {
    const Witness& w = two.witnesses[i];
    for (int side = 0; side < 2; ++side) {
      const auto& z = w.sets[side];
      const auto& other = w.sets[1 - side];
      if (z.size() < 3) continue;
      const SearchResult split = sumset_search_target(f.modulus(), z, inner);
      t.examined += split.examined;
      t.pruned += split.pruned;
      t.exhausted = t.exhausted || split.exhausted;
      for (const auto& s : split.witnesses) {
        Witness tw;
        tw.sets = {s.sets[0], s.sets[1], other};
        t.found.push_back(std::move(tw));
      }
    }
  });
  tally.examined += two.examined;
  tally.pruned += two.pruned;
  tally.exhausted = tally.exhausted || two.exhausted;
  finish(r, std::move(tally));
  for (const auto& w : r.witnesses) {
    const FpSet a = FpSet::from_canonical(f, w.sets[0]), b = FpSet::from_canonical(f, w.sets[1]),
                c = FpSet::from_canonical(f, w.sets[2]);
    if (a.sumset(b).sumset(c).values() != tlist) throw std::logic_error("threefold witness failed re-verification");
  }
  return r;
}

}  // namespace

SearchResult threefold_check(u64 p, u64 d, const SearchOptions& opt) {
  SearchResult two = sumset_search(p, d, opt);
  const Field f(p);
  return split_sides(f, std::move(two), roots_of_unity(f, d).values(), opt);
}

SearchResult threefold_check_target(u64 p, const std::vector<u64>& target, const SearchOptions& opt) {
  SearchResult two = sumset_search_target(p, target, opt);
  const Field f(p);
  const auto tlist = two.job.target;
  return split_sides(f, std::move(two), tlist, opt);
}

// ---------------------------------------------------------------------------

SearchResult levson_scan(u64 alpha_max, const SearchOptions& opt) {
  if (alpha_max < 2) throw std::invalid_argument("alpha_max must be at least 2");
  SearchResult r;
  r.job.kind = SearchKind::Levson;
  r.job.alpha_max = alpha_max;
  const std::size_t n = alpha_max - 1;
  std::vector<u64> primes(n, 0);
  Tally tally = run_branches(n, opt.parallel, [&](std::size_t i, Tally& t) {
    const u64 alpha = i + 2;
    const u64 p = 2 * alpha * (alpha - 1) + 1;
    if (!is_prime(p)) return;
    primes[i] = 1;
    const Field f(p);
    const u64 top = alpha * alpha - 1;  // < p, so no Lucas step is needed
    // C(top, k) for k = alpha .. 2alpha-1 by the ratio (top-k)/(k+1)
    u64 c = 1;
    for (u64 j = 0; j < alpha; ++j) c = f.div(f.mul(c, top - j), j + 1);
    const u64 base = c;
    for (u64 k = alpha; k + 1 <= 2 * alpha - 1; ++k) {
      c = f.div(f.mul(c, top - k), k + 1);
      const u64 nn = k + 2 - alpha;  // c = C(top, nn - 1 + alpha)
      ++t.examined;
      const u64 rhs = (nn - 1) % 2 == 0 ? base : f.neg(base);
      if (c == rhs) {
        Witness w;
        w.info = {{"p", std::to_string(p)}, {"alpha", std::to_string(alpha)}, {"n", std::to_string(nn)}};
        t.found.push_back(std::move(w));
      }
    }
  });
  r.primes_scanned = std::accumulate(primes.begin(), primes.end(), u64{0});
  r.examined = tally.examined;
  r.witnesses = std::move(tally.found);  // already in alpha order
  r.verdict = r.witnesses.empty() ? "none" : "found";
  return r;
}

SearchResult problem1_scan(u64 p, u64 alpha_max, const SearchOptions& opt) {
  require_prime_field(p, opt.p_bound ? opt.p_bound : kSmallBound);
  if (alpha_max < 2 || alpha_max >= p) throw std::invalid_argument("need 2 <= alpha_max < p");
  const Field f(p);
  SearchResult r;
  r.job.kind = SearchKind::Problem1;
  r.job.p = p;
  r.job.alpha_max = alpha_max;
  std::vector<u64> all_scalars;
  for (u64 c = 1; c < p; ++c) all_scalars.push_back(c);
  // x -> (x - a0)/(a1 - a0) over ordered pairs; scaling by every c is the
  // same as ranging over a1
  auto canon = [&](const std::vector<u64>& a) { return canonical_affine(f, a, all_scalars); };
  // {0, 1} plus (size-2) elements from [2, p); branch = (size, first extra)
  std::vector<std::pair<u64, u64>> branches;
  for (u64 s = 2; s <= alpha_max; ++s) {
    if (s == 2) {
      branches.emplace_back(2, 0);
      continue;
    }
    for (u64 x = 2; x < p; ++x) branches.emplace_back(s, x);
  }
  Tally tally = run_branches(branches.size(), opt.parallel, [&](std::size_t i, Tally& t) {
    const auto [size, first] = branches[i];
    std::vector<u64> a{0, 1};
    if (size > 2) a.push_back(first);
    auto rec = [&](auto&& self, u64 next) -> void {
      ++t.examined;
      if (over_budget(t, opt.node_budget)) return;
      if (a.size() == size) {
        const FpSet s = FpSet::from_canonical(f, a);
        if (rat2_everywhere(s)) {
          Witness w;
          w.sets = {canon(s.values())};
          t.found.push_back(std::move(w));
        }
        return;
      }
      for (u64 x = next; x < p && p - x >= size - a.size(); ++x) {
        a.push_back(x);
        self(self, x + 1);
        a.pop_back();
        if (t.exhausted) return;
      }
    };
    rec(rec, first + 1);
  });
  finish(r, std::move(tally));
  for (auto& w : r.witnesses) {
    const FpSet s = FpSet::from_canonical(f, w.sets[0]);
    if (!rat2_everywhere(s)) throw std::logic_error("problem1 witness failed re-verification");
    w.info["size"] = std::to_string(s.size());
    w.info["rat3"] = rat3_everywhere(s) ? "true" : "false";
  }
  return r;
}

namespace {

bool product_condition(const Field& f, const std::vector<u64>& a, u64 alpha) {
  const u64 minus_one = f.modulus() - 1;
  for (u64 x : a) {
    u64 prod = 1;
    for (u64 y : a)
      if (y != x) prod = f.mul(prod, f.sub(x, y));
    if (f.pow(prod, alpha) != minus_one) return false;
  }
  return true;
}

}  // namespace

SearchResult problem2_scan(u64 p, u64 alpha, const SearchOptions& opt) {
  require_prime_field(p, opt.p_bound ? opt.p_bound : kSmallBound);
  if (alpha < 2 || alpha >= p) throw std::invalid_argument("need 2 <= alpha < p");
  const Field f(p);
  SearchResult r;
  r.job.kind = SearchKind::Problem2;
  r.job.p = p;
  r.job.alpha = alpha;
  // scaling by c multiplies every product by c^{alpha(alpha-1)}
  const u64 g = std::gcd(alpha * (alpha - 1), p - 1);
  const std::vector<u64> scalars = roots_of_unity(f, g).values();
  Tally tally = run_branches(p - 1, opt.parallel, [&](std::size_t i, Tally& t) {
    std::vector<u64> a{0, i + 1};
    auto rec = [&](auto&& self, u64 next) -> void {
      ++t.examined;
      if (over_budget(t, opt.node_budget)) return;
      if (a.size() == alpha) {
        if (product_condition(f, a, alpha)) {
          Witness w;
          w.sets = {canonical_affine(f, a, scalars)};
          t.found.push_back(std::move(w));
        }
        return;
      }
      for (u64 x = next; x < p && p - x >= alpha - a.size(); ++x) {
        a.push_back(x);
        self(self, x + 1);
        a.pop_back();
        if (t.exhausted) return;
      }
    };
    rec(rec, i + 2);
  });
  finish(r, std::move(tally));
  for (auto& w : r.witnesses) {
    if (!product_condition(f, w.sets[0], alpha)) throw std::logic_error("problem2 witness failed re-verification");
    const FpSet s = FpSet::from_canonical(f, w.sets[0]);
    w.info["rat2"] = rat2_everywhere(s) ? "true" : "false";
  }
  if (p == 41 && alpha == 5) {
    // the known example is sometimes quoted with 41 in place of 40, which collides with 0
    const auto known = canonical_affine(f, {0, 1, 9, 32, 40}, scalars);
    const bool present = std::any_of(r.witnesses.begin(), r.witnesses.end(),
                                     [&](const Witness& w) { return w.sets[0] == known; });
    r.notes.push_back(std::string("class of {0,1,9,32,40} ") + (present ? "present" : "absent") +
                      "; the variant {0,1,9,32,41} reduces to four elements mod 41 and is read as 40");
  }
  return r;
}

}  // namespace mucrit
