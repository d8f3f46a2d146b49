#include "mucrit/residues.hpp"

#include <omp.h>

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "mucrit/gamma.hpp"
#include "mucrit/hp.hpp"
#include "mucrit/symm.hpp"

namespace mucrit {

RationalForm::RationalForm(FpPoly num, FpPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational form with zero denominator");
  if (!(num_.field() == den_.field())) throw std::invalid_argument("modulus mismatch");
  if (num_.is_zero()) {
    den_ = FpPoly::constant(den_.field(), 1);
    return;
  }
  const FpPoly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  const u64 lead = den_.leading();
  if (lead != 1) {
    const u64 inv = den_.field().inv(lead);
    num_ = num_.scale(inv);
    den_ = den_.scale(inv);
  }
}

u64 residue_at(const RationalForm& form, u64 point) {
  const Field& f = form.field();
  const u64 b = f.reduce_u(point);
  if (form.numerator().is_zero()) return 0;
  const unsigned m = root_multiplicity(form.denominator(), b);
  if (m == 0) return 0;
  const long mm = static_cast<long>(m);
  const auto num = taylor_at(form.numerator(), b, mm + 1);
  const auto den = taylor_at(form.denominator(), b, 2 * mm + 1);
  return (num / den).coeff(-1);
}

u64 residue_at_infinity(const RationalForm& form) {
  if (form.numerator().is_zero()) return 0;
  const Field& f = form.field();
  const long span = form.numerator().degree() + form.denominator().degree() + 4;
  const auto num = expansion_at_infinity(form.numerator(), span);
  const auto den = expansion_at_infinity(form.denominator(), span);
  // In u = 1/x the series is sum c_j u^j; residue = -c_1.
  const auto q = num / den;
  if (q.order() <= 1) throw std::logic_error("expansion at infinity too short");
  return f.neg(q.coeff(1));
}

ResidueTable residue_table(const RationalForm& form) {
  const Field& f = form.field();
  ResidueTable t;
  const auto poles = rational_roots(form.denominator());
  long split_degree = 0;
  for (u64 r : poles) split_degree += root_multiplicity(form.denominator(), r);
  t.denominator_splits = split_degree == form.denominator().degree();
  t.finite.resize(poles.size());
  const long n = static_cast<long>(poles.size());
#pragma omp parallel for schedule(static) if (n > 32)
  for (long i = 0; i < n; ++i) {
    t.finite[i] = {poles[i], residue_at(form, poles[i])};
  }
  t.at_infinity = residue_at_infinity(form);
  t.total = t.at_infinity;
  for (const auto& [pole, res] : t.finite) t.total = f.add(t.total, res);
  return t;
}

const char* to_string(ResidueSum s) {
  switch (s) {
    case ResidueSum::Zero:
      return "zero";
    case ResidueSum::Nonzero:
      return "nonzero";
    case ResidueSum::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

ResidueSum sum_residues_check(const RationalForm& form) {
  const auto t = residue_table(form);
  if (!t.denominator_splits) return ResidueSum::Inconclusive;
  return t.total == 0 ? ResidueSum::Zero : ResidueSum::Nonzero;
}

const char* to_string(FormKind k) {
  switch (k) {
    case FormKind::Omega20:
      return "omega20";
    case FormKind::Omega11:
      return "omega11";
    case FormKind::Omega30:
      return "omega30";
    case FormKind::Psi:
      return "psi";
    case FormKind::Omega21:
      return "omega21";
  }
  return "?";
}

std::optional<FormKind> form_kind_from_string(const std::string& s) {
  for (FormKind k : {FormKind::Omega20, FormKind::Omega11, FormKind::Omega30, FormKind::Psi,
                     FormKind::Omega21}) {
    if (s == to_string(k)) return k;
  }
  return std::nullopt;
}

namespace {

bool mixed(FormKind k) {
  return k == FormKind::Omega11 || k == FormKind::Psi || k == FormKind::Omega21;
}

void require_disjoint(const FpSet& a, const FpSet& b) {
  const Field& f = a.field();
  for (u64 x : a)
    if (b.contains(f.neg(x))) throw std::invalid_argument("a + b = 0 for some a in A, b in B");
}

}  // namespace

RationalForm make_form(FormKind kind, const FpSet& a, const FpSet& b, unsigned k) {
  const Field& f = b.field();
  if (b.empty()) throw std::invalid_argument("B must be nonempty");
  const FpPoly g = from_roots(b);
  const FpPoly dg = g.derivative();
  FpPoly h = FpPoly::constant(f, 1);
  if (mixed(kind)) {
    if (a.empty()) throw std::invalid_argument("A must be nonempty");
    if (!(a.field() == f)) throw std::invalid_argument("modulus mismatch");
    require_disjoint(a, b);
    h = from_roots(a.negated());
  }
  const FpPoly dh = h.derivative();
  switch (kind) {
    case FormKind::Omega20:
      return RationalForm(FpPoly::monomial(f, 1, k + 1) * dg * dg, g * g);
    case FormKind::Omega11:
      return RationalForm(FpPoly::monomial(f, 1, k + 1) * dg * dh, g * h);
    case FormKind::Omega30:
      return RationalForm(FpPoly::monomial(f, 1, k + 2) * dg * dg * dg, g * g * g);
    case FormKind::Psi: {
      const FpPoly dlog = g.derivative().derivative() * g - dg * dg;  // over g^2
      return RationalForm(FpPoly::monomial(f, 1, k + 2) * dlog * dh, g * g * h);
    }
    case FormKind::Omega21:
      return RationalForm(FpPoly::monomial(f, 1, k + 2) * dg * dg * dh, g * g * h);
  }
  throw std::logic_error("unknown form kind");
}

namespace {

/// Local data for the closed-form residues.
struct Locals {
  std::vector<LocalSums> s;         // per b
  std::vector<u64> h1, h2;          // per b: sum_a (a+b)^{-1}, ^{-2}
  std::vector<u64> k1, k2;          // per a: sum_b (a+b)^{-1}, ^{-2}
  std::vector<u64> pa, pb;          // power sums up to k
};

Locals compute_locals(const FpSet& a, const FpSet& b, unsigned k, bool with_a) {
  const Field& f = b.field();
  Locals l;
  l.s.reserve(b.size());
  for (u64 y : b) l.s.push_back(local_sums(b, y));
  l.pb = power_sums(b, k);
  if (!with_a) return l;
  l.pa = power_sums(a, k);
  std::vector<u64> sums;
  sums.reserve(a.size() * b.size());
  for (u64 x : a)
    for (u64 y : b) sums.push_back(f.add(x, y));
  const auto inv = batch_inverse(f, sums);
  l.h1.assign(b.size(), 0);
  l.h2.assign(b.size(), 0);
  l.k1.assign(a.size(), 0);
  l.k2.assign(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      const u64 v = inv[i * b.size() + j];
      const u64 v2 = f.mul(v, v);
      l.h1[j] = f.add(l.h1[j], v);
      l.h2[j] = f.add(l.h2[j], v2);
      l.k1[i] = f.add(l.k1[i], v);
      l.k2[i] = f.add(l.k2[i], v2);
    }
  }
  return l;
}

u64 sign(const Field& f, unsigned e) { return e % 2 == 0 ? 1 : f.neg(1); }

/// Residues at b in B (aligned with B) and at -a (aligned with A).
struct ClosedResidues {
  std::vector<u64> at_b;
  std::vector<u64> at_minus_a;
  u64 at_infinity = 0;
};

ClosedResidues closed_residues(FormKind kind, const FpSet& a, const FpSet& b, unsigned k,
                               const Locals& l) {
  const Field& f = b.field();
  ClosedResidues r;
  const u64 kk = f.reduce_u(k);
  const u64 kp1 = f.add(kk, 1), kp2 = f.add(kk, 2);
  for (std::size_t j = 0; j < b.size(); ++j) {
    const u64 y = b[j];
    const u64 yk = f.pow(y, k), yk1 = f.mul(yk, y), yk2 = f.mul(yk1, y);
    const auto& s = l.s[j];
    u64 v = 0;
    switch (kind) {
      case FormKind::Omega20:
        v = f.add(f.mul(kp1, yk), f.mul(2, f.mul(yk1, s.s1)));
        break;
      case FormKind::Omega11:
        v = f.mul(yk1, l.h1[j]);
        break;
      case FormKind::Omega30: {
        const u64 c = f.reduce_u((static_cast<u64>(k) + 2) * (k + 1) / 2);
        v = f.add(f.add(f.mul(c, yk), f.mul(f.mul(3, kp2), f.mul(yk1, s.s1))),
                  f.mul(3, f.mul(yk2, f.sub(f.mul(s.s1, s.s1), s.s2))));
        break;
      }
      case FormKind::Psi:
        v = f.sub(f.mul(yk2, l.h2[j]), f.mul(kp2, f.mul(yk1, l.h1[j])));
        break;
      case FormKind::Omega21:
        v = f.add(f.mul(2, f.mul(s.s1, f.mul(yk2, l.h1[j]))), f.mul(kp2, f.mul(yk1, l.h1[j])));
        v = f.sub(v, f.mul(yk2, l.h2[j]));
        break;
    }
    r.at_b.push_back(v);
  }
  if (mixed(kind)) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      const u64 x = a[i];
      u64 v = 0;
      switch (kind) {
        case FormKind::Omega11:
          v = f.mul(sign(f, k), f.mul(f.pow(x, k + 1), l.k1[i]));
          break;
        case FormKind::Psi:
          v = f.mul(sign(f, k + 1), f.mul(f.pow(x, k + 2), l.k2[i]));
          break;
        case FormKind::Omega21:
          v = f.mul(sign(f, k), f.mul(f.pow(x, k + 2), f.mul(l.k1[i], l.k1[i])));
          break;
        default:
          break;
      }
      r.at_minus_a.push_back(v);
    }
  }
  u64 conv = 0;
  switch (kind) {
    case FormKind::Omega20:
      for (unsigned q = 0; q <= k; ++q) conv = f.add(conv, f.mul(l.pb[q], l.pb[k - q]));
      r.at_infinity = f.neg(conv);
      break;
    case FormKind::Omega11:
      for (unsigned q = 0; q <= k; ++q)
        conv = f.add(conv, f.mul(sign(f, q), f.mul(l.pa[q], l.pb[k - q])));
      r.at_infinity = f.neg(conv);
      break;
    case FormKind::Omega30:
      for (unsigned q = 0; q <= k; ++q)
        for (unsigned s = 0; q + s <= k; ++s)
          conv = f.add(conv, f.mul(l.pb[q], f.mul(l.pb[s], l.pb[k - q - s])));
      r.at_infinity = f.neg(conv);
      break;
    case FormKind::Psi:
      for (unsigned q = 0; q <= k; ++q)
        conv = f.add(conv, f.mul(f.mul(sign(f, q), f.reduce_u(k - q + 1)),
                                 f.mul(l.pa[q], l.pb[k - q])));
      r.at_infinity = conv;
      break;
    case FormKind::Omega21:
      for (unsigned q = 0; q <= k; ++q)
        for (unsigned s = 0; q + s <= k; ++s)
          conv = f.add(conv, f.mul(f.mul(l.pb[q], l.pb[s]),
                                   f.mul(sign(f, k - q - s), l.pa[k - q - s])));
      r.at_infinity = f.neg(conv);
      break;
  }
  return r;
}

bool engine_agrees(FormKind kind, const FpSet& a, const FpSet& b, unsigned k,
                   const ClosedResidues& c) {
  const Field& f = b.field();
  const RationalForm form = make_form(kind, a, b, k);
  for (std::size_t j = 0; j < b.size(); ++j)
    if (residue_at(form, b[j]) != c.at_b[j]) return false;
  for (std::size_t i = 0; i < c.at_minus_a.size(); ++i)
    if (residue_at(form, f.neg(a[i])) != c.at_minus_a[i]) return false;
  if (residue_at_infinity(form) != c.at_infinity) return false;
  const auto table = residue_table(form);
  return table.denominator_splits && table.total == 0;
}

struct HypothesisLog {
  bool ok = true;
  std::string message;
  void fail(const std::string& m) {
    if (ok) message = m;
    ok = false;
  }
};

void check_pair_terms(HypothesisLog& log, const Field& f, const std::vector<u64>& x,
                      const std::vector<u64>& y, unsigned k, const char* xname, const char* yname) {
  for (unsigned r = 1; r < k; ++r) {
    if (f.mul(x[r], y[k - r]) != 0) {
      std::ostringstream os;
      os << "cross term p_" << r << "(" << xname << ") p_" << (k - r) << "(" << yname
         << ") is nonzero (p_" << r << "(" << xname << ") = " << x[r] << ", p_" << (k - r) << "("
         << yname << ") = " << y[k - r] << ")";
      log.fail(os.str());
      return;
    }
  }
}

void check_triple_terms(HypothesisLog& log, const Field& f, const std::vector<u64>& x,
                        const std::vector<u64>& y, const std::vector<u64>& z, unsigned k,
                        const char* names) {
  for (unsigned r = 0; r <= k; ++r) {
    for (unsigned s = 0; r + s <= k; ++s) {
      const unsigned t = k - r - s;
      if (r == k || s == k || t == k) continue;
      if (f.mul(x[r], f.mul(y[s], z[t])) != 0) {
        std::ostringstream os;
        os << "cross term (" << r << "," << s << "," << t << ") of " << names << " is nonzero";
        log.fail(os.str());
        return;
      }
    }
  }
}

}  // namespace

FormIdentityReport lemma_form_identity(FormKind kind, const FpSet& a, const FpSet& b, unsigned k,
                                       IdentityMode mode, std::optional<u64> d) {
  const Field& f = b.field();
  if (b.empty()) throw std::invalid_argument("B must be nonempty");
  if (mixed(kind)) {
    if (a.empty()) throw std::invalid_argument("A must be nonempty");
    if (!(a.field() == f)) throw std::invalid_argument("modulus mismatch");
    require_disjoint(a, b);
  }
  FormIdentityReport rep;
  rep.kind = kind;
  rep.mode = mode;
  rep.k = k;
  const Locals l = compute_locals(a, b, k, mixed(kind));
  const ClosedResidues c = closed_residues(kind, a, b, k, l);

  if (mode == IdentityMode::General) {
    u64 finite = 0;
    for (u64 v : c.at_b) finite = f.add(finite, v);
    for (u64 v : c.at_minus_a) finite = f.add(finite, v);
    rep.lhs = finite;
    rep.rhs = f.neg(c.at_infinity);
    rep.ok = rep.lhs == rep.rhs;
    rep.engine_ok = engine_agrees(kind, a, b, k, c);
    return rep;
  }

  HypothesisLog log;
  if (k == 0) log.fail("specialized identities need k >= 1");
  const u64 alpha = f.reduce_u(mixed(kind) ? a.size() : 0);
  const u64 beta = f.reduce_u(b.size());
  const u64 kk = f.reduce_u(k);
  const u64 kp1 = f.add(kk, 1);

  // sum_b b^{k+1} S1(b) and sum_b b^{k+2}(S1^2 - S2)
  u64 bs1 = 0, bs12 = 0;
  for (std::size_t j = 0; j < b.size(); ++j) {
    const u64 yk1 = f.pow(b[j], k + 1);
    bs1 = f.add(bs1, f.mul(yk1, l.s[j].s1));
    bs12 = f.add(bs12, f.mul(f.mul(yk1, b[j]),
                             f.sub(f.mul(l.s[j].s1, l.s[j].s1), l.s[j].s2)));
  }

  switch (kind) {
    case FormKind::Omega20:
      check_pair_terms(log, f, l.pb, l.pb, k, "B", "B");
      rep.lhs = bs1;
      rep.rhs = f.mul(l.pb[k], f.sub(beta, f.div(kp1, 2)));
      break;
    case FormKind::Omega11: {
      std::vector<u64> signed_pa(l.pa);
      for (unsigned r = 0; r <= k; ++r) signed_pa[r] = f.mul(sign(f, r), l.pa[r]);
      check_pair_terms(log, f, signed_pa, l.pb, k, "A", "B");
      u64 sb = 0, sa = 0;
      for (std::size_t j = 0; j < b.size(); ++j) sb = f.add(sb, f.mul(f.pow(b[j], k + 1), l.h1[j]));
      for (std::size_t i = 0; i < a.size(); ++i) sa = f.add(sa, f.mul(f.pow(a[i], k + 1), l.k1[i]));
      rep.lhs = f.add(sb, f.mul(sign(f, k), sa));
      rep.rhs = f.add(f.mul(alpha, l.pb[k]), f.mul(sign(f, k), f.mul(beta, l.pa[k])));
      break;
    }
    case FormKind::Omega30: {
      check_triple_terms(log, f, l.pb, l.pb, l.pb, k, "p(B)p(B)p(B)");
      check_pair_terms(log, f, l.pb, l.pb, k, "B", "B");
      if (f.modulus() <= 3) throw std::domain_error("needs p > 3");
      const u64 kp2 = f.add(kk, 2);
      const u64 g2 = f.add(f.sub(f.mul(beta, beta), f.mul(kp2, beta)), f.div(f.mul(kp1, kp2), 3));
      rep.lhs = bs12;
      rep.rhs = f.mul(g2, l.pb[k]);
      break;
    }
    case FormKind::Psi:
    case FormKind::Omega21: {
      if (!d) throw std::invalid_argument("specialized psi/omega21 need d");
      if (a.size() != b.size()) log.fail("|A| != |B|");
      if (k % 2 != 0) log.fail("k is odd");
      if (l.pa[k] != f.neg(l.pb[k])) log.fail("p_k(A) != -p_k(B)");
      check_pair_terms(log, f, l.pb, l.pb, k, "B", "B");
      if (kind == FormKind::Psi) {
        std::vector<u64> signed_pa(l.pa);
        for (unsigned r = 0; r <= k; ++r) signed_pa[r] = f.mul(sign(f, r), l.pa[r]);
        check_pair_terms(log, f, signed_pa, l.pb, k, "A", "B");
      } else {
        std::vector<u64> signed_pa(l.pa);
        for (unsigned r = 0; r <= k; ++r) signed_pa[r] = f.mul(sign(f, r), l.pa[r]);
        check_triple_terms(log, f, l.pb, l.pb, signed_pa, k, "p(B)p(B)p(A)");
      }
      const GammaNumeric g = gamma_numeric(f, a.size(), k, *d);
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (l.h1[j] != f.mul(g.g0, l.s[j].s1)) {
          log.fail("sum_a 1/(a+b) != g0 S1(b) at b = " + std::to_string(b[j]));
          break;
        }
      }
      if (kind == FormKind::Psi) {
        u64 lhs = 0;
        for (std::size_t j = 0; j < b.size(); ++j) lhs = f.add(lhs, f.mul(f.pow(b[j], k + 2), l.h2[j]));
        for (std::size_t i = 0; i < a.size(); ++i) lhs = f.sub(lhs, f.mul(f.pow(a[i], k + 2), l.k2[i]));
        rep.lhs = lhs;
        rep.rhs = f.mul(g.g4, l.pb[k]);
      } else {
        if (g.g0 == 0) throw std::domain_error("g0 vanishes");
        u64 ta = 0, tb = 0, tc = 0;
        for (std::size_t i = 0; i < a.size(); ++i)
          ta = f.add(ta, f.mul(f.pow(a[i], k + 2), f.mul(l.k1[i], l.k1[i])));
        for (std::size_t j = 0; j < b.size(); ++j) {
          const u64 yk2 = f.pow(b[j], k + 2);
          tb = f.add(tb, f.mul(yk2, f.mul(l.h1[j], l.h1[j])));
          tc = f.add(tc, f.mul(yk2, l.h2[j]));
        }
        rep.lhs = f.sub(f.add(ta, f.mul(f.div(2, g.g0), tb)), tc);
        rep.rhs = f.mul(g.g5, l.pb[k]);
      }
      break;
    }
  }
  rep.hypotheses_ok = log.ok;
  rep.hypothesis_failure = log.message;
  rep.ok = log.ok && rep.lhs == rep.rhs;
  rep.engine_ok = true;
  return rep;
}

namespace {

std::mt19937_64 instance_rng(u64 seed, std::size_t index) {
  std::seed_seq seq{static_cast<unsigned>(seed & 0xffffffffu), static_cast<unsigned>(seed >> 32),
                    static_cast<unsigned>(index & 0xffffffffu),
                    static_cast<unsigned>(static_cast<u64>(index) >> 32)};
  return std::mt19937_64(seq);
}

u64 draw(std::mt19937_64& rng, u64 n) { return rng() % n; }

FpSet random_set(std::mt19937_64& rng, const Field& f, std::size_t size) {
  std::vector<u64> v;
  while (v.size() < size) {
    const u64 x = draw(rng, f.modulus());
    if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
  }
  return FpSet::from_canonical(f, std::move(v));
}

bool residue_instance(u64 p, u64 seed, std::size_t index) {
  auto rng = instance_rng(seed, index);
  const Field f(p);
  const std::size_t poles = 1 + draw(rng, std::min<u64>(6, p - 1));
  const FpSet roots = random_set(rng, f, poles);
  FpPoly den = FpPoly::constant(f, 1);
  for (u64 r : roots) den = den * FpPoly::linear_root(f, r).pow(1 + draw(rng, 3));
  std::vector<u64> num(1 + draw(rng, static_cast<u64>(den.degree()) + 4));
  for (auto& c : num) c = draw(rng, p);
  num.back() = 1 + draw(rng, p - 1);
  return sum_residues_check(RationalForm(FpPoly(f, num), den)) == ResidueSum::Zero;
}

bool identity_instance(FormKind kind, u64 p, u64 seed, std::size_t index) {
  auto rng = instance_rng(seed, index);
  const Field f(p);
  const unsigned k = static_cast<unsigned>(draw(rng, 7));
  const std::size_t max_size = std::min<u64>(6, (p - 1) / 2);
  const FpSet b = random_set(rng, f, 1 + draw(rng, max_size));
  FpSet a(f);
  if (mixed(kind)) {
    for (;;) {
      a = random_set(rng, f, 1 + draw(rng, max_size));
      bool clash = false;
      for (u64 x : a) clash = clash || b.contains(f.neg(x));
      if (!clash) break;
    }
  }
  const auto rep = lemma_form_identity(kind, a, b, k, IdentityMode::General);
  return rep.ok && rep.engine_ok;
}

template <typename Fn>
RandomSuiteSummary run_suite(std::size_t count, bool parallel, Fn fn) {
  std::vector<char> ok(count, 0);
  const long n = static_cast<long>(count);
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (long i = 0; i < n; ++i) ok[i] = fn(static_cast<std::size_t>(i)) ? 1 : 0;
  } else {
    for (long i = 0; i < n; ++i) ok[i] = fn(static_cast<std::size_t>(i)) ? 1 : 0;
  }
  RandomSuiteSummary s;
  s.instances = count;
  for (std::size_t i = 0; i < count; ++i) {
    if (ok[i]) {
      ++s.passed;
    } else {
      s.failures.push_back(i);
    }
  }
  return s;
}

}  // namespace

RandomSuiteSummary random_residue_suite(u64 p, std::size_t count, u64 seed) {
  return run_suite(count, true, [&](std::size_t i) { return residue_instance(p, seed, i); });
}

RandomSuiteSummary random_residue_suite_serial(u64 p, std::size_t count, u64 seed) {
  return run_suite(count, false, [&](std::size_t i) { return residue_instance(p, seed, i); });
}

RandomSuiteSummary random_identity_suite(FormKind kind, u64 p, std::size_t count, u64 seed) {
  return run_suite(count, true, [&](std::size_t i) { return identity_instance(kind, p, seed, i); });
}

RandomSuiteSummary random_identity_suite_serial(FormKind kind, u64 p, std::size_t count,
                                                u64 seed) {
  return run_suite(count, false,
                   [&](std::size_t i) { return identity_instance(kind, p, seed, i); });
}

}  // namespace mucrit
