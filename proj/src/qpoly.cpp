#include "mucrit/qpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace mucrit {

QPoly QPoly::constant(std::size_t nvars, const Rational& c) {
  QPoly p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

QPoly QPoly::variable(std::size_t nvars, std::size_t index) { return term(nvars, index, 1); }

QPoly QPoly::term(std::size_t nvars, std::size_t index, unsigned e, const Rational& c) {
  if (index >= nvars) throw std::out_of_range("variable index");
  QPoly p(nvars);
  Monomial m(nvars, 0);
  m[index] = e;
  p.add_term(m, c);
  return p;
}

QPoly QPoly::univariate(std::size_t nvars, std::size_t index, const std::vector<Rational>& coeffs) {
  QPoly p(nvars);
  for (std::size_t j = 0; j < coeffs.size(); ++j) p = p + term(nvars, index, j, coeffs[j]);
  return p;
}

void QPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (fresh) {
    // mpq_class(n, d) is not reduced on construction
    it->second.canonicalize();
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void QPoly::check_same(const QPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
}

Rational QPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

long QPoly::degree(std::size_t index) const {
  long d = -1;
  for (const auto& [m, c] : terms_) d = std::max<long>(d, m[index]);
  return d;
}

QPoly QPoly::coeff_of(std::size_t index, unsigned e) const {
  QPoly out(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[index] != e) continue;
    Monomial mm = m;
    mm[index] = 0;
    out.add_term(mm, c);
  }
  return out;
}

std::vector<Rational> QPoly::univariate_coeffs(std::size_t index) const {
  std::vector<Rational> out(static_cast<std::size_t>(degree(index) + 1));
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i)
      if (i != index && m[i] != 0) throw std::invalid_argument("polynomial is not univariate");
    out[m[index]] = c;
  }
  return out;
}

QPoly QPoly::operator+(const QPoly& o) const {
  check_same(o);
  QPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator-() const {
  QPoly r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

QPoly QPoly::operator*(const QPoly& o) const {
  check_same(o);
  QPoly r(nvars_);
  Monomial mm(nvars_);
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      for (std::size_t i = 0; i < nvars_; ++i) mm[i] = m1[i] + m2[i];
      r.add_term(mm, c1 * c2);
    }
  }
  return r;
}

QPoly QPoly::scale(const Rational& c) const {
  if (c == 0) return QPoly(nvars_);
  QPoly r(nvars_);
  for (const auto& [m, x] : terms_) r.terms_.emplace(m, x * c);
  return r;
}

QPoly QPoly::pow(unsigned e) const {
  QPoly result = constant(nvars_, 1);
  QPoly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

QPoly QPoly::derivative(std::size_t index) const {
  QPoly r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[index] == 0) continue;
    Monomial mm = m;
    --mm[index];
    r.add_term(mm, c * m[index]);
  }
  return r;
}

QPoly QPoly::substitute(std::size_t index, const QPoly& value) const {
  check_same(value);
  QPoly r(nvars_);
  const long deg = degree(index);
  std::vector<QPoly> powers;
  powers.push_back(constant(nvars_, 1));
  for (long e = 1; e <= deg; ++e) powers.push_back(powers.back() * value);
  for (const auto& [m, c] : terms_) {
    Monomial mm = m;
    mm[index] = 0;
    QPoly t(nvars_);
    t.add_term(mm, c);
    r = r + t * powers[m[index]];
  }
  return r;
}

Rational QPoly::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != nvars_) throw std::invalid_argument("point dimension mismatch");
  Rational s = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (unsigned e = 0; e < m[i]; ++e) t *= point[i];
    s += t;
  }
  return s;
}

std::string QPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = abs(c);
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    bool has_var = false;
    for (unsigned e : m) has_var = has_var || e > 0;
    if (!has_var || a != 1) os << a.get_str();
    bool need_star = !has_var || a != 1;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      if (need_star) os << "*";
      os << (i < names.size() ? names[i] : "x" + std::to_string(i));
      if (m[i] > 1) os << "^" << m[i];
      need_star = true;
    }
  }
  return os.str();
}

QPoly falling_factorial(const QPoly& x, unsigned m) {
  QPoly r = QPoly::constant(x.nvars(), 1);
  for (unsigned j = 0; j < m; ++j) r = r * (x - QPoly::constant(x.nvars(), j));
  return r;
}

QPoly univariate_rem(const QPoly& a, const QPoly& monic_mod, std::size_t index) {
  auto r = a.univariate_coeffs(index);
  const auto m = monic_mod.univariate_coeffs(index);
  if (m.empty() || m.back() != 1) throw std::invalid_argument("modulus must be monic");
  const std::size_t dm = m.size() - 1;
  for (std::size_t i = r.size(); i-- > dm;) {
    const Rational lead = r[i];
    if (lead == 0) continue;
    for (std::size_t j = 0; j <= dm; ++j) r[i - dm + j] -= lead * m[j];
  }
  if (r.size() > dm) r.resize(dm);
  return QPoly::univariate(a.nvars(), index, r);
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

Rational resultant(const std::vector<Rational>& f, const std::vector<Rational>& g) {
  const std::size_t df = f.size() - 1, dg = g.size() - 1;
  const std::size_t n = df + dg;
  std::vector<std::vector<Rational>> s(n, std::vector<Rational>(n, 0));
  // rows of f shifted dg times, then rows of g shifted df times; leading first
  for (std::size_t i = 0; i < dg; ++i)
    for (std::size_t j = 0; j <= df; ++j) s[i][i + j] = f[df - j];
  for (std::size_t i = 0; i < df; ++i)
    for (std::size_t j = 0; j <= dg; ++j) s[dg + i][i + j] = g[dg - j];
  return determinant(std::move(s));
}

namespace {

const QPoly& k_zero() {
  static const QPoly z(1);
  return z;
}

void require_k(const QPoly& p) {
  if (p.nvars() != 1) throw std::invalid_argument("coefficients must be polynomials in k only");
}

}  // namespace

QQuadElem::QQuadElem(QPoly u, QPoly v) : u_(std::move(u)), v_(std::move(v)) {
  require_k(u_);
  require_k(v_);
}

QQuadElem QQuadElem::rational(const Rational& c) { return {k_zero(), QPoly::constant(1, c)}; }
QQuadElem QQuadElem::root() { return {QPoly::constant(1, 1), k_zero()}; }
QQuadElem QQuadElem::k() { return {k_zero(), QPoly::variable(1, 0)}; }

QQuadElem QQuadElem::reduce(const QPoly& p) {
  if (p.nvars() != 2) throw std::invalid_argument("expected a polynomial in (r, k)");
  QPoly u(1), v(1);
  for (const auto& [m, c] : p.terms()) {
    // r^e = (-1/2)^{e/2} r^{e mod 2}
    Rational f = c;
    for (unsigned j = 0; j < m[0] / 2; ++j) f *= Rational(-1, 2);
    const QPoly t = QPoly::term(1, 0, m[1], f);
    if (m[0] % 2) {
      u = u + t;
    } else {
      v = v + t;
    }
  }
  return {u, v};
}

QQuadElem QQuadElem::operator+(const QQuadElem& o) const { return {u_ + o.u_, v_ + o.v_}; }
QQuadElem QQuadElem::operator-(const QQuadElem& o) const { return {u_ - o.u_, v_ - o.v_}; }
QQuadElem QQuadElem::operator-() const { return {-u_, -v_}; }
QQuadElem QQuadElem::scale(const Rational& c) const { return {u_.scale(c), v_.scale(c)}; }

QQuadElem QQuadElem::operator*(const QQuadElem& o) const {
  // (u r + v)(u' r + v') = u u' r^2 + (u v' + v u') r + v v', r^2 = -1/2
  return {u_ * o.v_ + v_ * o.u_, v_ * o.v_ - (u_ * o.u_).scale(Rational(1, 2))};
}

QQuadElem QQuadElem::conjugate() const { return {-u_, v_}; }

QPoly QQuadElem::norm() const { return v_ * v_ + (u_ * u_).scale(Rational(1, 2)); }

QQuadElem QQuadElem::inverse() const {
  const QPoly n = norm();
  if (n.is_zero() || n.degree(0) > 0) {
    throw std::domain_error("inverse needs a nonzero constant norm");
  }
  return conjugate().scale(1 / n.coeff({0}));
}

std::string QQuadElem::to_string() const {
  return "(" + u_.to_string({"k"}) + ")*alpha + (" + v_.to_string({"k"}) + ")";
}

}  // namespace mucrit
