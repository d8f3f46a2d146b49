#include "mucrit/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mucrit {

FpPoly::FpPoly(const Field& f, std::vector<u64> coeffs) : field_(f), c_(std::move(coeffs)) {
  for (auto& v : c_) v = f.reduce_u(v);
  trim();
}

FpPoly FpPoly::from_signed(const Field& f, std::initializer_list<i64> coeffs) {
  std::vector<u64> c;
  for (i64 v : coeffs) c.push_back(f.reduce(v));
  return FpPoly(f, std::move(c));
}

FpPoly FpPoly::constant(const Field& f, u64 c) { return FpPoly(f, std::vector<u64>{c}); }

FpPoly FpPoly::monomial(const Field& f, u64 c, std::size_t deg) {
  std::vector<u64> v(deg + 1, 0);
  v[deg] = c;
  return FpPoly(f, std::move(v));
}

FpPoly FpPoly::linear_root(const Field& f, u64 a) {
  return FpPoly(f, std::vector<u64>{f.neg(a % f.modulus()), 1});
}

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void FpPoly::check_same(const FpPoly& o) const {
  if (!(field_ == o.field_)) throw std::invalid_argument("polynomial modulus mismatch");
}

u64 FpPoly::eval(u64 x) const {
  u64 acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), c_[i]);
  return acc;
}

FpPoly FpPoly::derivative() const {
  if (c_.size() <= 1) return FpPoly(field_);
  std::vector<u64> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = field_.mul(c_[i], i % field_.modulus());
  return FpPoly(field_, std::move(d));
}

FpPoly FpPoly::nth_derivative(unsigned n) const {
  FpPoly r = *this;
  for (unsigned i = 0; i < n; ++i) r = r.derivative();
  return r;
}

FpPoly FpPoly::monic() const {
  if (is_zero()) return *this;
  return scale(field_.inv(leading()));
}

FpPoly FpPoly::scale(u64 c) const {
  std::vector<u64> out(c_);
  for (auto& v : out) v = field_.mul(v, c % field_.modulus());
  return FpPoly(field_, std::move(out));
}

FpPoly FpPoly::pow(u64 e) const {
  FpPoly result = constant(field_, 1);
  FpPoly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

FpPoly FpPoly::shift(u64 t) const {
  if (is_zero()) return *this;
  // Taylor coefficients at t are exactly the coefficients of f(x + t).
  return FpPoly(field_, taylor_at(*this, t, static_cast<long>(c_.size())).coeffs());
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
  check_same(o);
  std::vector<u64> out(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_.add(coeff(i), o.coeff(i));
  return FpPoly(field_, std::move(out));
}

FpPoly FpPoly::operator-(const FpPoly& o) const {
  check_same(o);
  std::vector<u64> out(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_.sub(coeff(i), o.coeff(i));
  return FpPoly(field_, std::move(out));
}

FpPoly FpPoly::operator-() const { return FpPoly(field_) - *this; }

FpPoly FpPoly::operator*(const FpPoly& o) const {
  check_same(o);
  if (is_zero() || o.is_zero()) return FpPoly(field_);
  const u64 p = field_.modulus();
  std::vector<u128> acc(c_.size() + o.c_.size() - 1, 0);
  // Accumulate in 128 bits and reduce periodically; each product is < 2^126.
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      acc[i + j] += static_cast<u128>(c_[i]) * o.c_[j];
      if (acc[i + j] >= (static_cast<u128>(1) << 126)) acc[i + j] %= p;
    }
  }
  std::vector<u64> out(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) out[i] = static_cast<u64>(acc[i] % p);
  return FpPoly(field_, std::move(out));
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& d) const {
  check_same(d);
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  if (degree() < d.degree()) return {FpPoly(field_), *this};
  std::vector<u64> r(c_);
  std::vector<u64> q(c_.size() - d.c_.size() + 1, 0);
  const u64 inv_lead = field_.inv(d.leading());
  const std::size_t dn = d.c_.size() - 1;
  for (std::size_t i = q.size(); i-- > 0;) {
    const u64 factor = field_.mul(r[i + dn], inv_lead);
    q[i] = factor;
    if (factor == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) {
      r[i + j] = field_.sub(r[i + j], field_.mul(factor, d.c_[j]));
    }
  }
  r.resize(dn);
  return {FpPoly(field_, std::move(q)), FpPoly(field_, std::move(r))};
}

std::string FpPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c_[i] != 1) os << c_[i];
    if (i > 0) os << (c_[i] != 1 ? "*" : "") << "x" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return os.str();
}

FpPoly gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FpPoly powmod(const FpPoly& base, u64 e, const FpPoly& m) {
  FpPoly result = FpPoly::constant(base.field(), 1) % m;
  FpPoly b = base % m;
  while (e) {
    if (e & 1) result = (result * b) % m;
    e >>= 1;
    if (e) b = (b * b) % m;
  }
  return result;
}

namespace {

void split_roots(const FpPoly& g, std::vector<u64>& out) {
  const Field& f = g.field();
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    out.push_back(f.neg(f.div(g.coeff(0), g.coeff(1))));
    return;
  }
  const u64 half = (f.modulus() - 1) / 2;
  for (u64 delta = 0;; ++delta) {
    FpPoly shifted(f, std::vector<u64>{delta % f.modulus(), 1});
    FpPoly t = powmod(shifted, half, g) - FpPoly::constant(f, 1);
    FpPoly h = gcd(g, t);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      split_roots(h, out);
      split_roots(g / h, out);
      return;
    }
  }
}

}  // namespace

std::vector<u64> rational_roots(const FpPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("rational_roots of the zero polynomial");
  const Field& field = f.field();
  const u64 p = field.modulus();
  std::vector<u64> out;
  if (f.degree() <= 0) return out;
  if (p <= 257) {
    for (u64 x = 0; x < p; ++x)
      if (f.eval(x) == 0) out.push_back(x);
    return out;
  }
  const FpPoly x = FpPoly::monomial(field, 1, 1);
  const FpPoly xp = powmod(x, p, f);
  const FpPoly g = gcd(f, xp - x);
  split_roots(g, out);
  std::sort(out.begin(), out.end());
  return out;
}

unsigned root_multiplicity(const FpPoly& f, u64 a) {
  if (f.is_zero()) throw std::invalid_argument("multiplicity in the zero polynomial");
  const FpPoly lin = FpPoly::linear_root(f.field(), a);
  unsigned m = 0;
  FpPoly cur = f;
  while (cur.degree() >= 1 && cur.eval(a) == 0) {
    cur = cur / lin;
    ++m;
  }
  return m;
}

FpPoly from_roots(const FpSet& roots, unsigned multiplicity) {
  const Field& f = roots.field();
  FpPoly acc = FpPoly::constant(f, 1);
  for (u64 r : roots) acc = acc * FpPoly::linear_root(f, r);
  return multiplicity == 1 ? acc : acc.pow(multiplicity);
}

TruncatedSeries::TruncatedSeries(const Field& f, std::optional<u64> center, long start,
                                 std::vector<u64> coeffs, long order)
    : field_(f), center_(center), start_(start), c_(std::move(coeffs)), order_(order) {
  for (auto& v : c_) v = f.reduce_u(v);
  normalize();
}

void TruncatedSeries::normalize() {
  if (start_ > order_) start_ = order_;
  const long keep = std::max<long>(0, order_ - start_);
  if (static_cast<long>(c_.size()) > keep) c_.resize(static_cast<std::size_t>(keep));
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead == c_.size()) {
    c_.clear();
    start_ = order_;
    return;
  }
  c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
  start_ += static_cast<long>(lead);
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

u64 TruncatedSeries::coeff(long e) const {
  if (e >= order_) throw std::out_of_range("coefficient beyond truncation order");
  if (e < start_ || e >= start_ + static_cast<long>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(e - start_)];
}

long TruncatedSeries::valuation() const { return c_.empty() ? order_ : start_; }

void TruncatedSeries::check_compatible(const TruncatedSeries& o) const {
  if (!(field_ == o.field_)) throw std::invalid_argument("series modulus mismatch");
  if (center_ != o.center_) throw std::invalid_argument("series centers differ");
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  check_compatible(o);
  const long ord = std::min(order_, o.order_);
  const long lo = std::min(start_, o.start_);
  std::vector<u64> out(static_cast<std::size_t>(std::max<long>(0, ord - lo)), 0);
  for (long e = lo; e < ord; ++e) {
    u64 a = (e >= start_ && e < start_ + static_cast<long>(c_.size())) ? c_[e - start_] : 0;
    u64 b = (e >= o.start_ && e < o.start_ + static_cast<long>(o.c_.size())) ? o.c_[e - o.start_]
                                                                               : 0;
    out[static_cast<std::size_t>(e - lo)] = field_.add(a, b);
  }
  return TruncatedSeries(field_, center_, lo, std::move(out), ord);
}

TruncatedSeries TruncatedSeries::scale(u64 c) const {
  std::vector<u64> out(c_);
  for (auto& v : out) v = field_.mul(v, c % field_.modulus());
  return TruncatedSeries(field_, center_, start_, std::move(out), order_);
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
  return *this + o.scale(field_.modulus() - 1);
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  check_compatible(o);
  const long rel = std::min(order_ - start_, o.order_ - o.start_);
  const long st = start_ + o.start_;
  std::vector<u64> out(static_cast<std::size_t>(std::max<long>(0, rel)), 0);
  for (std::size_t i = 0; i < c_.size() && static_cast<long>(i) < rel; ++i) {
    for (std::size_t j = 0; j < o.c_.size() && static_cast<long>(i + j) < rel; ++j) {
      out[i + j] = field_.add(out[i + j], field_.mul(c_[i], o.c_[j]));
    }
  }
  return TruncatedSeries(field_, center_, st, std::move(out), st + rel);
}

TruncatedSeries TruncatedSeries::operator/(const TruncatedSeries& o) const {
  check_compatible(o);
  if (o.c_.empty()) throw std::domain_error("series division by a series with no known term");
  const long rel = std::min(order_ - start_, o.order_ - o.start_);
  const long st = start_ - o.start_;
  const std::size_t n = static_cast<std::size_t>(std::max<long>(0, rel));
  // Inverse of o's unit part, then multiply.
  std::vector<u64> inv(n, 0);
  if (n > 0) {
    const u64 lead_inv = field_.inv(o.c_[0]);
    inv[0] = lead_inv;
    for (std::size_t k = 1; k < n; ++k) {
      u64 s = 0;
      for (std::size_t j = 1; j <= k && j < o.c_.size(); ++j) {
        s = field_.add(s, field_.mul(o.c_[j], inv[k - j]));
      }
      inv[k] = field_.neg(field_.mul(s, lead_inv));
    }
  }
  std::vector<u64> out(n, 0);
  for (std::size_t i = 0; i < c_.size() && i < n; ++i) {
    for (std::size_t j = 0; i + j < n; ++j) {
      out[i + j] = field_.add(out[i + j], field_.mul(c_[i], inv[j]));
    }
  }
  return TruncatedSeries(field_, center_, st, std::move(out), st + rel);
}

TruncatedSeries taylor_at(const FpPoly& f, u64 a, long order) {
  if (order < 1) throw std::invalid_argument("taylor_at requires order >= 1");
  const Field& field = f.field();
  const std::size_t need = std::min<std::size_t>(static_cast<std::size_t>(order), f.coeffs().size());
  std::vector<u64> work(f.coeffs());
  std::vector<u64> out;
  out.reserve(need);
  const u64 aa = a % field.modulus();
  while (out.size() < need) {
    // One synthetic division by (x - a): remainder is the next coefficient.
    u64 carry = 0;
    std::vector<u64> q(work.empty() ? 0 : work.size() - 1);
    for (std::size_t i = work.size(); i-- > 0;) {
      u64 v = field.add(work[i], field.mul(carry, aa));
      if (i > 0) q[i - 1] = v;
      carry = v;
    }
    out.push_back(carry);
    work = std::move(q);
  }
  return TruncatedSeries(field, aa, 0, std::move(out), order);
}

TruncatedSeries expansion_at_infinity(const FpPoly& f, long order) {
  std::vector<u64> rev(f.coeffs().rbegin(), f.coeffs().rend());
  const long start = -f.degree();
  return TruncatedSeries(f.field(), std::nullopt, f.is_zero() ? order : start, std::move(rev),
                         order);
}

TruncatedSeries log_derivative_series(const FpPoly& g, std::optional<u64> center, long order) {
  if (g.is_zero()) throw std::invalid_argument("log derivative of the zero polynomial");
  const FpPoly dg = g.derivative();
  if (!center) {
    const long len = std::max<long>(order, 1) + 2;
    auto num = expansion_at_infinity(dg, len);
    auto den = expansion_at_infinity(g, len);
    auto q = num / den;
    return TruncatedSeries(g.field(), std::nullopt, q.start(), q.coeffs(), std::min(order, q.order()));
  }
  const u64 c = *center % g.field().modulus();
  if (g.eval(c) == 0 && dg.eval(c) == 0) {
    throw std::invalid_argument("log_derivative_series: center is a multiple root");
  }
  const long len = std::max<long>(order, 1) + 3;
  auto q = taylor_at(dg, c, len) / taylor_at(g, c, len);
  return TruncatedSeries(g.field(), c, q.start(), q.coeffs(), std::min(order, q.order()));
}

}  // namespace mucrit
