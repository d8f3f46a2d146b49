#include "mucrit/hp.hpp"

#include <algorithm>
#include <stdexcept>

namespace mucrit {

u64 HPCoeffs::at(u64 a) const {
  const auto& v = set.values();
  auto it = std::lower_bound(v.begin(), v.end(), a);
  if (it == v.end() || *it != a) throw std::invalid_argument("element not in set");
  return c[static_cast<std::size_t>(it - v.begin())];
}

HPCoeffs hp_coeffs(const FpSet& a) {
  const Field& f = a.field();
  if (a.size() < 2 || a.size() >= f.modulus()) {
    throw std::invalid_argument("hp_coeffs requires 2 <= |A| < p");
  }
  std::vector<u64> prods(a.size(), 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (i != j) prods[i] = f.mul(prods[i], f.sub(a[i], a[j]));
    }
  }
  return HPCoeffs{a, batch_inverse(f, prods)};
}

HPCoeffs hp_coeffs_via_derivative(const FpSet& a) {
  const Field& f = a.field();
  if (a.size() < 2 || a.size() >= f.modulus()) {
    throw std::invalid_argument("hp_coeffs requires 2 <= |A| < p");
  }
  const FpPoly df = from_roots(a).derivative();
  std::vector<u64> vals;
  vals.reserve(a.size());
  for (u64 x : a) vals.push_back(df.eval(x));
  return HPCoeffs{a, batch_inverse(f, vals)};
}

HPCoeffs hp_coeffs_vandermonde(const FpSet& a) {
  const Field& f = a.field();
  const std::size_t n = a.size();
  if (n < 2 || n >= f.modulus()) throw std::invalid_argument("hp_coeffs requires 2 <= |A| < p");
  // row m: sum_i c_i a_i^m = [m == n-1]; last column is the right side
  std::vector<std::vector<u64>> m(n, std::vector<u64>(n + 1, 0));
  for (std::size_t i = 0; i < n; ++i) {
    u64 pw = 1;
    for (std::size_t r = 0; r < n; ++r) {
      m[r][i] = pw;
      pw = f.mul(pw, a[i]);
    }
  }
  m[n - 1][n] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (m[piv][col] == 0) ++piv;  // Vandermonde on distinct points is invertible
    std::swap(m[piv], m[col]);
    const u64 inv = f.inv(m[col][col]);
    for (auto& x : m[col]) x = f.mul(x, inv);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const u64 factor = m[r][col];
      for (std::size_t j = col; j <= n; ++j) m[r][j] = f.sub(m[r][j], f.mul(factor, m[col][j]));
    }
  }
  std::vector<u64> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = m[i][n];
  return HPCoeffs{a, c};
}

bool hp_moments_hold(const HPCoeffs& c) {
  const Field& f = c.set.field();
  const std::size_t alpha = c.set.size();
  std::vector<u64> pw(alpha, 1);
  for (std::size_t m = 0; m < alpha; ++m) {
    u64 s = 0;
    for (std::size_t i = 0; i < alpha; ++i) {
      s = f.add(s, f.mul(c.c[i], pw[i]));
      pw[i] = f.mul(pw[i], c.set[i]);
    }
    if (s != (m + 1 == alpha ? 1u : 0u)) return false;
  }
  return true;
}

FpPoly hp_polynomial(const FpSet& a, u64 d) {
  const Field& f = a.field();
  const u64 alpha = a.size();
  if (alpha <= 1) throw std::invalid_argument("hp_polynomial requires |A| > 1");
  if (d < 1 || alpha + d - 1 >= f.modulus()) {
    throw std::invalid_argument("hp_polynomial requires |A| + d - 1 < p");
  }
  const u64 n = alpha + d - 1;
  const HPCoeffs c = hp_coeffs(a);
  const FactorialTable table(f, n);
  // moment[k] = sum_a c_a a^k, k = 0..n
  std::vector<u64> moment(n + 1, 0);
  for (std::size_t i = 0; i < alpha; ++i) {
    u64 pw = 1;
    for (u64 k = 0; k <= n; ++k) {
      moment[k] = f.add(moment[k], f.mul(c.c[i], pw));
      pw = f.mul(pw, a[i]);
    }
  }
  std::vector<u64> coeffs(n + 1);
  for (u64 j = 0; j <= n; ++j) coeffs[j] = f.mul(table.binom(n, j), moment[n - j]);
  coeffs[0] = f.sub(coeffs[0], 1);
  FpPoly hp(f, std::move(coeffs));
  if (hp.degree() != static_cast<long>(d) || hp.leading() != table.binom(n, d)) {
    throw std::logic_error("HP polynomial degree differs from d");
  }
  return hp;
}

std::vector<bool> mu_with_zero_bitset(const Field& f, u64 d) {
  std::vector<bool> bits(f.modulus(), false);
  bits[0] = true;
  for (u64 x : roots_of_unity(f, d)) bits[x] = true;
  return bits;
}

CriticalityReport criticality(const FpSet& a, const FpSet& b, u64 d) {
  const Field& f = a.field();
  if (!(f == b.field())) throw std::invalid_argument("modulus mismatch");
  if (a.size() < 2 || b.size() < 2) throw std::invalid_argument("criticality requires |A|,|B| > 1");
  const auto allowed = mu_with_zero_bitset(f, d);
  CriticalityReport r{a, b, d, false, 0, false, false, false, {}};
  r.sumset_ok = true;
  std::vector<bool> hit(f.modulus(), false);
  for (u64 x : a) {
    for (u64 y : b) {
      const u64 s = f.add(x, y);
      if (!allowed[s]) r.sumset_ok = false;
      hit[s] = true;
    }
  }
  r.epsilon.reserve(b.size());
  for (u64 y : b) {
    const int e = a.contains(f.neg(y)) ? 1 : 0;
    r.epsilon.push_back(e);
    r.overlap += static_cast<std::size_t>(e);
  }
  r.critical = r.sumset_ok && a.size() * b.size() == d + r.overlap;
  if (r.sumset_ok) {
    std::size_t hits_nonzero = 0;
    for (u64 x = 1; x < f.modulus(); ++x) hits_nonzero += (hit[x] && allowed[x]) ? 1 : 0;
    const bool all_mu = hits_nonzero == d;
    r.sumset_equals_mu = all_mu && !hit[0];
    r.sumset_equals_mu_zero = all_mu && hit[0];
  }
  return r;
}

bool power_sum_vanishing(const FpSet& a, const FpSet& b, u64 d) {
  const auto rep = criticality(a, b, d);
  if (!rep.sumset_equals_mu && !rep.sumset_equals_mu_zero) {
    throw std::invalid_argument("power_sum_vanishing requires A + B = mu_d or mu_d with 0");
  }
  const Field& f = a.field();
  std::vector<u64> sums;
  for (u64 x : a)
    for (u64 y : b) sums.push_back(f.add(x, y));
  std::vector<u64> pw(sums);
  for (u64 k = 1; k < d; ++k) {
    u64 total = 0;
    for (std::size_t i = 0; i < sums.size(); ++i) {
      total = f.add(total, pw[i]);
      pw[i] = f.mul(pw[i], sums[i]);
    }
    if (total != 0) return false;
  }
  return true;
}

FactorizationReport factorization_check(const FpSet& a, const FpSet& b, u64 d) {
  const auto rep = criticality(a, b, d);
  if (!rep.critical) throw std::invalid_argument("factorization_check requires a d-critical pair");
  const Field& f = a.field();
  FpPoly hp = hp_polynomial(a, d);
  FpPoly prod = FpPoly::constant(f, 1);
  for (std::size_t i = 0; i < b.size(); ++i) {
    prod = prod * FpPoly::linear_root(f, b[i]).pow(a.size() - static_cast<u64>(rep.epsilon[i]));
  }
  const u64 c = hp.leading();
  const bool ok = hp == prod.scale(c);
  return FactorizationReport{FieldElem::from_canonical(f, c), ok, std::move(hp), std::move(prod)};
}

FpSet fractional_transform(const FpSet& a, u64 elem, u64 d) {
  if (!a.contains(elem)) throw std::invalid_argument("fractional_transform: element not in A");
  if (!criticality(a, a.negated(), d).critical) {
    throw std::invalid_argument("fractional_transform requires (A, -A) d-critical");
  }
  const Field& f = a.field();
  std::vector<u64> diffs;
  for (u64 x : a)
    if (x != elem) diffs.push_back(f.sub(elem, x));
  std::vector<u64> out = batch_inverse(f, diffs);
  out.push_back(0);
  FpSet t = FpSet::from_canonical(f, std::move(out));
  if (t.size() != a.size() || !criticality(t, t.negated(), d).critical) {
    throw std::logic_error("fractional transform lost d-criticality");
  }
  return t;
}

FpSet reciprocal_set(const FpSet& a, u64 b) {
  const Field& f = a.field();
  std::vector<u64> shifted;
  shifted.reserve(a.size());
  for (u64 x : a) {
    const u64 s = f.add(x, b % f.modulus());
    if (s == 0) throw std::invalid_argument("reciprocal_set: a + b = 0 for some a");
    shifted.push_back(s);
  }
  return FpSet::from_canonical(f, batch_inverse(f, shifted));
}

ReciprocalIdentityReport reciprocal_identity_check(const FpSet& a, const FpSet& b, u64 d,
                                                   u64 elem_b) {
  const Field& f = a.field();
  if (!b.contains(elem_b)) throw std::invalid_argument("element not in B");
  const auto rep = criticality(a, b, d);
  if (!rep.critical || rep.overlap != 0) {
    throw std::invalid_argument("reciprocal identity requires A + B = mu_d");
  }
  const u64 alpha = a.size();
  const u64 n = alpha + d - 1;
  const FpSet ab = reciprocal_set(a, elem_b);
  const HPCoeffs cab = hp_coeffs(ab);
  const HPCoeffs ca = hp_coeffs(a);
  const FactorialTable table(f, n);

  std::vector<u64> shifted;
  for (u64 x : a) shifted.push_back(f.add(x, elem_b));
  const auto recips = batch_inverse(f, shifted);

  // lhs coefficient of x^j: C(n, j) sum_a c'_a (a+b) (1/(a+b))^{n-j}
  std::vector<u64> lhs(n + 1, 0);
  u64 c_inf_unsigned = 1;
  bool rel_signed = true, rel_unsigned = true;
  const u64 sign = (alpha - 1) % 2 == 0 ? 1 : f.neg(1);
  for (std::size_t i = 0; i < alpha; ++i) c_inf_unsigned = f.mul(c_inf_unsigned, shifted[i]);
  for (std::size_t i = 0; i < alpha; ++i) {
    const u64 cprime = cab.at(recips[i]);
    const u64 base = f.mul(cprime, shifted[i]);
    u64 pw = 1;
    for (u64 k = 0; k <= n; ++k) {
      lhs[n - k] = f.add(lhs[n - k], f.mul(base, pw));
      pw = f.mul(pw, recips[i]);
    }
    const u64 expected = f.mul(f.mul(c_inf_unsigned, ca.c[i]), f.pow(shifted[i], alpha - 2));
    if (cprime != f.mul(sign, expected)) rel_signed = false;
    if (cprime != expected) rel_unsigned = false;
  }
  for (u64 j = 0; j <= n; ++j) lhs[j] = f.mul(lhs[j], table.binom(n, j));
  FpPoly lhs_poly(f, std::move(lhs));

  const u64 c0 = FactorialTable(f, n).binom(n, alpha);
  const u64 k_inf = f.mul(sign, c_inf_unsigned);
  FpPoly prod = FpPoly::monomial(f, 1, alpha - 1);
  for (u64 y : b) {
    if (y == elem_b) continue;
    const u64 r = f.inv(f.sub(elem_b, y));
    prod = prod * FpPoly(f, std::vector<u64>{r, 1}).pow(alpha);
  }
  FpPoly rhs = FpPoly::monomial(f, k_inf, n) + prod.scale(c0);
  ReciprocalIdentityReport out{lhs_poly,
                               rhs,
                               FieldElem::from_canonical(f, c0),
                               FieldElem::from_canonical(f, k_inf),
                               FieldElem::from_canonical(f, c_inf_unsigned),
                               lhs_poly == rhs,
                               rel_signed,
                               rel_unsigned};
  return out;
}

LocalSums local_sums(const FpSet& set, u64 elem) {
  const Field& f = set.field();
  std::vector<u64> diffs;
  for (u64 x : set)
    if (x != elem) diffs.push_back(f.sub(elem, x));
  LocalSums s;
  for (u64 inv : batch_inverse(f, diffs)) {
    const u64 sq = f.mul(inv, inv);
    s.s1 = f.add(s.s1, inv);
    s.s2 = f.add(s.s2, sq);
    s.s3 = f.add(s.s3, f.mul(sq, inv));
  }
  return s;
}

namespace {

struct MixedSums {
  u64 h1 = 0, h2 = 0;
};

MixedSums mixed_sums(const FpSet& a, u64 b) {
  const Field& f = a.field();
  std::vector<u64> sums;
  for (u64 x : a) {
    const u64 s = f.add(x, b);
    if (s == 0) throw std::invalid_argument("a + b = 0 for some a in A");
    sums.push_back(s);
  }
  MixedSums m;
  for (u64 inv : batch_inverse(f, sums)) {
    m.h1 = f.add(m.h1, inv);
    m.h2 = f.add(m.h2, f.mul(inv, inv));
  }
  return m;
}

u64 checked_denominator(const Field& f, u64 d, u64 shift) {
  const u64 v = f.sub(f.reduce_u(d), shift);
  if (v == 0) throw std::domain_error("d - " + std::to_string(shift) + " vanishes mod p");
  return v;
}

}  // namespace

RelationReport relation_x(const FpSet& a, const FpSet& b, u64 elem_b, u64 d) {
  const Field& f = a.field();
  if (!b.contains(elem_b)) throw std::invalid_argument("element not in B");
  const u64 alpha = f.reduce_u(a.size());
  const u64 factor = f.div(f.mul(alpha, f.add(alpha, 1)), checked_denominator(f, d, 1));
  const auto m = mixed_sums(a, elem_b);
  const auto s = local_sums(b, elem_b);
  const u64 rhs = f.mul(factor, s.s1);
  return RelationReport{FieldElem::from_canonical(f, m.h1), FieldElem::from_canonical(f, rhs),
                        m.h1 == rhs};
}

RelationReport relation_y(const FpSet& a, const FpSet& b, u64 elem_b, u64 d) {
  const Field& f = a.field();
  if (!b.contains(elem_b)) throw std::invalid_argument("element not in B");
  const u64 alpha = f.reduce_u(a.size());
  const u64 num = f.mul(f.mul(alpha, f.add(alpha, 1)), f.add(alpha, 2));
  const u64 den = f.mul(checked_denominator(f, d, 1), checked_denominator(f, d, 2));
  const u64 factor = f.div(num, den);
  const auto m = mixed_sums(a, elem_b);
  const auto s = local_sums(b, elem_b);
  const u64 lhs = f.add(f.mul(m.h1, m.h1), m.h2);
  const u64 rhs = f.mul(factor, f.sub(f.mul(alpha, f.mul(s.s1, s.s1)), s.s2));
  return RelationReport{FieldElem::from_canonical(f, lhs), FieldElem::from_canonical(f, rhs),
                        lhs == rhs};
}

}  // namespace mucrit
