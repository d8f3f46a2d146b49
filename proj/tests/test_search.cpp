#include <doctest.h>
#include <omp.h>

#include <algorithm>
#include <random>
#include <set>

#include "mucrit/search.hpp"
#include "oracles.hpp"

using namespace mucrit;

namespace {

using Set = std::vector<u64>;

Set mu_oracle(u64 p, u64 d) {
  Set out;
  for (u64 x = 1; x < p; ++x)
    if (oracle::powmod(x, d, p) == 1) out.push_back(x);
  return out;
}

Set sorted_image(const Set& a, u64 shift_from, u64 c, u64 p) {
  Set out;
  for (u64 x : a) out.push_back((x + p - shift_from) % p * c % p);
  std::sort(out.begin(), out.end());
  return out;
}

/// Some x -> c(x - a0) with c in scalars maps A onto a translate of B.
bool affine_equivalent(const Set& a, const Set& b, const Set& scalars, u64 p) {
  if (a.size() != b.size()) return false;
  for (u64 b0 : b) {
    const Set target = sorted_image(b, b0, 1, p);
    for (u64 a0 : a)
      for (u64 c : scalars)
        if (sorted_image(a, a0, c, p) == target) return true;
  }
  return false;
}

/// (A, B) ~ (c(A + t), c(B - t)) or swapped.
bool pair_equivalent(const Set& a, const Set& b, const Set& x, const Set& y, const Set& scalars, u64 p) {
  auto image = [&](const Set& s, u64 t, u64 c) {
    Set out;
    for (u64 v : s) out.push_back((v + t) % p * c % p);
    std::sort(out.begin(), out.end());
    return out;
  };
  for (int swap = 0; swap < 2; ++swap) {
    const Set& u = swap ? b : a;
    const Set& v = swap ? a : b;
    for (u64 t = 0; t < p; ++t)
      for (u64 c : scalars)
        if (image(u, t, c) == x && image(v, p - t, c) == y) return true;
  }
  return false;
}

Set all_units(u64 p) {
  Set s;
  for (u64 c = 1; c < p; ++c) s.push_back(c);
  return s;
}

bool is_subset_mu0(const Set& a, const Set& mu, u64 p) {
  for (u64 x : a)
    for (u64 y : a)
      if (x != y && !std::binary_search(mu.begin(), mu.end(), (x + p - y) % p)) return false;
  return true;
}

Set sumset_oracle(const Set& a, const Set& b, u64 p) {
  std::set<u64> s;
  for (u64 x : a)
    for (u64 y : b) s.insert((x + y) % p);
  return Set(s.begin(), s.end());
}

Set random_set(std::mt19937_64& rng, u64 p, std::size_t n) { return oracle::random_subset(rng, p, n); }

}  // namespace

TEST_CASE("difference sets: small exhaustive comparison") {
  for (auto [p, d] : {std::pair<u64, u64>{13, 6}, {31, 6}, {37, 12}, {41, 20}, {61, 20}, {61, 12}}) {
    const auto r = diffset_search(p, d);
    const Set mu = mu_oracle(p, d);
    u64 alpha = 2;
    while (alpha * (alpha - 1) < d) ++alpha;
    // brute force over all alpha-subsets containing 0
    std::vector<Set> brute;
    Set a{0};
    auto rec = [&](auto&& self, u64 next) -> void {
      if (a.size() == alpha) {
        if (is_subset_mu0(a, mu, p)) brute.push_back(a);
        return;
      }
      for (u64 x = next; x < p; ++x) {
        a.push_back(x);
        self(self, x + 1);
        a.pop_back();
      }
    };
    rec(rec, 1);
    INFO("p=" << p << " d=" << d);
    for (const auto& b : brute) {
      bool seen = false;
      for (const auto& w : r.witnesses) seen = seen || affine_equivalent(b, w.sets[0], mu, p);
      CHECK(seen);
    }
    for (const auto& w : r.witnesses) {
      CHECK(is_subset_mu0(w.sets[0], mu, p));
      CHECK(w.sets[0] == canonical_diffset(FpSet::from_canonical(Field(p), w.sets[0]), d));
    }
    // distinct witnesses lie in distinct classes
    for (std::size_t i = 0; i < r.witnesses.size(); ++i)
      for (std::size_t j = i + 1; j < r.witnesses.size(); ++j)
        CHECK_FALSE(affine_equivalent(r.witnesses[i].sets[0], r.witnesses[j].sets[0], mu, p));
  }
}

TEST_CASE("difference sets: named examples") {
  const auto r13 = diffset_search(13, 6);
  REQUIRE(r13.witnesses.size() == 1);
  CHECK(affine_equivalent(r13.witnesses[0].sets[0], {0, 1, 10}, mu_oracle(13, 6), 13));
  CHECK(r13.witnesses[0].info.at("exact") == "true");

  const auto r41 = diffset_search(41, 20);
  REQUIRE(r41.witnesses.size() == 1);
  const Field f41(41);
  CHECK(r41.witnesses[0].sets[0] == canonical_diffset(FpSet(f41, {0, 1, 9, 32, 40}), 20));
  CHECK(r41.witnesses[0].info.at("exact") == "false");

  CHECK_THROWS_AS(diffset_search(31, 20), std::invalid_argument);
  CHECK_THROWS_AS(diffset_search(15, 2), std::invalid_argument);
  CHECK(diffset_search(31, 10).verdict == "none");  // 10 is not a(a-1)
}

TEST_CASE("difference sets: exact equality only for d = 2 or 6 up to 200") {
  for (u64 p = 5; p <= 200; ++p) {
    if (!oracle::trial_division_prime(p)) continue;
    for (u64 a = 2; a * (a - 1) < p - 1; ++a) {
      const u64 d = a * (a - 1);
      if ((p - 1) % d) continue;
      for (const auto& w : diffset_search(p, d).witnesses) {
        if (w.info.at("exact") == "true") CHECK((d == 2 || d == 6));
      }
    }
  }
}

TEST_CASE("difference sets: planted targets are found") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const u64 p = std::vector<u64>{31, 37, 43, 53}[rng() % 4];
    const Set a = random_set(rng, p, 3 + rng() % 2);
    std::set<u64> t;
    for (u64 x : a)
      for (u64 y : a)
        if (x != y) t.insert((x + p - y) % p);
    for (int k = 0; k < 4; ++k) {
      const u64 z = 1 + rng() % (p - 1);
      t.insert(z);
      t.insert(p - z);
    }
    const auto r = diffset_search_target(p, Set(t.begin(), t.end()), a.size());
    bool seen = false;
    for (const auto& w : r.witnesses) seen = seen || affine_equivalent(a, w.sets[0], {1}, p);
    CHECK(seen);
  }
}

TEST_CASE("sumsets: small exhaustive comparison") {
  for (auto [p, d] : {std::pair<u64, u64>{13, 4}, {13, 6}, {17, 4}, {29, 4}, {37, 9}, {17, 8}}) {
    const auto r = sumset_search(p, d);
    const Set mu = mu_oracle(p, d);
    INFO("p=" << p << " d=" << d);
    // every pair with 0 in A: B is inside mu, A inside mu - b for each b
    std::vector<std::pair<Set, Set>> brute;
    const std::size_t n = mu.size();
    for (u64 bm = 1; bm < (1ULL << n); ++bm) {
      if (__builtin_popcountll(bm) < 2) continue;
      Set b;
      for (std::size_t i = 0; i < n; ++i)
        if (bm >> i & 1) b.push_back(mu[i]);
      Set amax;
      for (u64 x = 0; x < p; ++x) {
        bool ok = true;
        for (u64 y : b) ok = ok && std::binary_search(mu.begin(), mu.end(), (x + y) % p);
        if (ok) amax.push_back(x);
      }
      if (amax.size() > 16) continue;  // never happens at these sizes
      for (u64 am = 1; am < (1ULL << amax.size()); ++am) {
        Set a;
        for (std::size_t i = 0; i < amax.size(); ++i)
          if (am >> i & 1) a.push_back(amax[i]);
        if (a.size() < 2 || a[0] != 0) continue;
        if (sumset_oracle(a, b, p) == mu) brute.emplace_back(a, b);
      }
    }
    for (const auto& [a, b] : brute) {
      bool seen = false;
      for (const auto& w : r.witnesses) seen = seen || pair_equivalent(a, b, w.sets[0], w.sets[1], mu, p);
      CHECK(seen);
    }
    for (const auto& w : r.witnesses) CHECK(sumset_oracle(w.sets[0], w.sets[1], p) == mu);
    CHECK(r.witnesses.empty() == brute.empty());
  }
}

TEST_CASE("sumsets: balanced sizes and even indices") {
  const auto r = sumset_search(13, 4);
  REQUIRE_FALSE(r.witnesses.empty());
  for (u64 p = 7; p <= 61; ++p) {
    if (!oracle::trial_division_prime(p)) continue;
    for (u64 d = 2; d < p - 1; ++d) {
      if ((p - 1) % d) continue;
      for (const auto& w : sumset_search(p, d).witnesses) {
        INFO("p=" << p << " d=" << d);
        CHECK(w.sets[0].size() * w.sets[0].size() == d);
        CHECK(w.sets[1].size() * w.sets[1].size() == d);
        CHECK(w.info.at("indices_even") == "true");
      }
    }
  }
}

TEST_CASE("sumsets: quadratic residues do not split") {
  for (u64 p = 7; p <= 61; ++p) {
    if (!oracle::trial_division_prime(p)) continue;
    const auto r = sumset_search(p, (p - 1) / 2);
    CHECK(r.verdict == "none");
    CHECK_FALSE(r.exhausted);
  }
  CHECK(sumset_search(19, 9).verdict == "none");
}

TEST_CASE("sumsets: planted targets are found") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    const u64 p = std::vector<u64>{31, 37, 43}[rng() % 3];
    const Set a = random_set(rng, p, 2 + rng() % 2), b = random_set(rng, p, 2 + rng() % 2);
    const Set t = sumset_oracle(a, b, p);
    const auto r = sumset_search_target(p, t);
    bool seen = false;
    for (const auto& w : r.witnesses) seen = seen || pair_equivalent(a, b, w.sets[0], w.sets[1], {1}, p);
    CHECK(seen);
  }
}

TEST_CASE("sumsets: budget exhaustion is reported") {
  SearchOptions opt;
  opt.node_budget = 1;
  const auto r = sumset_search(61, 30, opt);
  CHECK(r.exhausted);
  CHECK(r.verdict == "exhausted");
  CHECK_THROWS_AS(sumset_search(131, 10), std::invalid_argument);
}

TEST_CASE("three-fold sums") {
  for (u64 p : {13ULL, 29ULL, 37ULL, 41ULL}) {
    for (u64 d = 2; d < p - 1; ++d) {
      if ((p - 1) % d) continue;
      CHECK(threefold_check(p, d).verdict == "none");
    }
  }
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const u64 p = 31;
    const Set a = random_set(rng, p, 2), b = random_set(rng, p, 2), c = random_set(rng, p, 2);
    const Set t = sumset_oracle(sumset_oracle(a, b, p), c, p);
    const auto r = threefold_check_target(p, t);
    REQUIRE_FALSE(r.witnesses.empty());
    for (const auto& w : r.witnesses)
      CHECK(sumset_oracle(sumset_oracle(w.sets[0], w.sets[1], p), w.sets[2], p) == t);
  }
}

TEST_CASE("Lev-Sonn scan against exact binomials") {
  const auto r = levson_scan(60);
  std::vector<std::array<u64, 3>> expect;
  u64 primes = 0;
  for (u64 a = 2; a <= 60; ++a) {
    const u64 p = 2 * a * (a - 1) + 1;
    if (!oracle::trial_division_prime(p)) continue;
    ++primes;
    const u64 base = oracle::exact_binom_mod(a * a - 1, a, p);
    for (u64 n = 2; n <= a; ++n) {
      const u64 lhs = oracle::exact_binom_mod(a * a - 1, n - 1 + a, p);
      const u64 rhs = (n - 1) % 2 == 0 ? base : (p - base) % p;
      if (lhs == rhs) expect.push_back({p, a, n});
    }
  }
  CHECK(r.primes_scanned == primes);
  REQUIRE(r.witnesses.size() == expect.size());
  for (std::size_t i = 0; i < expect.size(); ++i) {
    CHECK(r.witnesses[i].info.at("p") == std::to_string(expect[i][0]));
    CHECK(r.witnesses[i].info.at("alpha") == std::to_string(expect[i][1]));
    CHECK(r.witnesses[i].info.at("n") == std::to_string(expect[i][2]));
  }
  // 56 = 56 at alpha = 3
  CHECK(oracle::exact_binom_mod(8, 5, 13) == oracle::exact_binom_mod(8, 3, 13));
}

TEST_CASE("Lev-Sonn scan to 3000") {
  const auto r = levson_scan(3000);
  CHECK(r.primes_scanned == 586);
  REQUIRE(r.witnesses.size() == 2);
  CHECK(r.witnesses[0].info == std::map<std::string, std::string>{{"alpha", "3"}, {"n", "3"}, {"p", "13"}});
  CHECK(r.witnesses[1].info == std::map<std::string, std::string>{{"alpha", "5"}, {"n", "4"}, {"p", "41"}});
}

TEST_CASE("problem scans") {
  const auto r2 = problem2_scan(41, 5);
  const Set units = all_units(41);
  REQUIRE(r2.witnesses.size() == 1);
  CHECK(affine_equivalent(r2.witnesses[0].sets[0], {0, 1, 9, 32, 40}, units, 41));

  for (u64 p : {13ULL, 17ULL, 29ULL}) {
    const auto r1 = problem1_scan(p, 5);
    u64 i = 2;
    while (oracle::powmod(i, 2, p) != p - 1) ++i;
    bool seen = false;
    for (const auto& w : r1.witnesses) {
      CHECK(w.sets[0].size() != 2);
      seen = seen || affine_equivalent(w.sets[0], {0, 1, p - 1, i, p - i}, all_units(p), p);
    }
    CHECK(seen);
  }
}

TEST_CASE("results are independent of threads and round-trip through JSON") {
  const int saved = omp_get_max_threads();
  std::vector<std::string> outs;
  for (int threads : {1, 4, 16}) {
    omp_set_num_threads(threads);
    std::string all;
    all += to_json(diffset_search(61, 20));
    all += to_json(sumset_search(37, 9));
    all += to_json(levson_scan(200));
    all += to_json(problem2_scan(41, 5));
    outs.push_back(all);
  }
  omp_set_num_threads(saved);
  CHECK(outs[0] == outs[1]);
  CHECK(outs[0] == outs[2]);

  SearchOptions serial;
  serial.parallel = false;
  CHECK(to_json(sumset_search(37, 9, serial)) == to_json(sumset_search(37, 9)));
  CHECK(to_json(levson_scan(200, serial)) == to_json(levson_scan(200)));

  for (const auto& r : {diffset_search(41, 20), sumset_search(13, 4), levson_scan(50),
                        problem1_scan(13, 5), sumset_search_target(31, {1, 2, 5, 9})}) {
    const std::string j = to_json(r);
    CHECK(search_result_from_json(j) == r);
    CHECK(to_json(search_result_from_json(j)) == j);
  }
  CHECK(to_json(diffset_search(13, 6)).find("\"schema\": \"mucrit/1\"") != std::string::npos);
  CHECK_THROWS_AS(search_result_from_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(search_result_from_json("{\"schema\": \"other\"}"), std::invalid_argument);
}
