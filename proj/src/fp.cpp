#include "mucrit/fp.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mucrit {

namespace {

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool miller_rabin_witness(u64 n, u64 a, u64 d, int s) {
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int r = 1; r < s; ++r) {
    x = mulmod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  static constexpr u64 small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 q : small) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This base set is deterministic below 3.3e24.
  for (u64 a : small) {
    if (miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

Field::Field(u64 p) : p_(p) {
  if (p >= (u64{1} << 63)) throw std::invalid_argument("modulus exceeds 63 bits");
  if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
}

u64 Field::pow(u64 a, u64 e) const noexcept { return powmod(a, e, p_); }

u64 Field::inv(u64 a) const {
  a %= p_;
  if (a == 0) throw std::domain_error("inverse of zero in F_" + std::to_string(p_));
  // Extended Euclid on signed 128-bit keeps this exact for 63-bit moduli.
  __int128 t = 0, new_t = 1;
  __int128 r = p_, new_r = a;
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<u64>(t);
}

FieldElem FieldElem::from_canonical(const Field& f, u64 v) {
  if (v >= f.modulus()) throw std::invalid_argument("value not canonical");
  return FieldElem(f.modulus(), v, 0);
}

void FieldElem::check_same(const FieldElem& o) const {
  if (p_ != o.p_) {
    throw std::invalid_argument("modulus mismatch: " + std::to_string(p_) + " vs " +
                                std::to_string(o.p_));
  }
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  check_same(o);
  u64 s = v_ + o.v_;
  return FieldElem(p_, s >= p_ ? s - p_ : s, 0);
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  check_same(o);
  return FieldElem(p_, v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_, 0);
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  check_same(o);
  return FieldElem(p_, mulmod(v_, o.v_, p_), 0);
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
  check_same(o);
  return *this * o.inverse();
}

FieldElem FieldElem::operator-() const { return FieldElem(p_, v_ == 0 ? 0 : p_ - v_, 0); }

FieldElem FieldElem::inverse() const {
  Field f(p_);
  return FieldElem(p_, f.inv(v_), 0);
}

FieldElem FieldElem::pow(u64 e) const { return FieldElem(p_, powmod(v_, e, p_), 0); }

std::ostream& operator<<(std::ostream& os, const FieldElem& x) {
  return os << x.value() << " (mod " << x.modulus() << ")";
}

FpSet::FpSet(const Field& f, std::span<const i64> values) : field_(f) {
  elems_.reserve(values.size());
  for (i64 v : values) elems_.push_back(f.reduce(v));
  std::sort(elems_.begin(), elems_.end());
  if (std::adjacent_find(elems_.begin(), elems_.end()) != elems_.end()) {
    throw std::invalid_argument("set elements collide modulo " + std::to_string(f.modulus()));
  }
}

FpSet::FpSet(const Field& f, std::initializer_list<i64> values)
    : FpSet(f, std::span<const i64>(values.begin(), values.size())) {}

FpSet FpSet::from_canonical(const Field& f, std::vector<u64> values) {
  FpSet s(f);
  for (u64 v : values) {
    if (v >= f.modulus()) throw std::invalid_argument("value not canonical");
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  s.elems_ = std::move(values);
  return s;
}

bool FpSet::contains(u64 x) const { return std::binary_search(elems_.begin(), elems_.end(), x); }

FpSet FpSet::negated() const {
  std::vector<u64> out;
  out.reserve(size());
  for (u64 v : elems_) out.push_back(field_.neg(v));
  return from_canonical(field_, std::move(out));
}

FpSet FpSet::shifted(u64 t) const {
  std::vector<u64> out;
  out.reserve(size());
  for (u64 v : elems_) out.push_back(field_.add(v, t % modulus()));
  return from_canonical(field_, std::move(out));
}

FpSet FpSet::scaled(u64 c) const {
  if (c % modulus() == 0) throw std::invalid_argument("scaling by zero");
  std::vector<u64> out;
  out.reserve(size());
  for (u64 v : elems_) out.push_back(field_.mul(v, c % modulus()));
  return from_canonical(field_, std::move(out));
}

FpSet FpSet::difference_set(const FpSet& other) const {
  if (!(field_ == other.field_)) throw std::invalid_argument("modulus mismatch");
  std::vector<u64> out;
  for (u64 x : elems_)
    for (u64 y : other.elems_) out.push_back(field_.sub(x, y));
  return from_canonical(field_, std::move(out));
}

FpSet FpSet::sumset(const FpSet& other) const {
  if (!(field_ == other.field_)) throw std::invalid_argument("modulus mismatch");
  std::vector<u64> out;
  for (u64 x : elems_)
    for (u64 y : other.elems_) out.push_back(field_.add(x, y));
  return from_canonical(field_, std::move(out));
}

FpSet FpSet::intersection(const FpSet& other) const {
  if (!(field_ == other.field_)) throw std::invalid_argument("modulus mismatch");
  std::vector<u64> out;
  std::set_intersection(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                        std::back_inserter(out));
  return from_canonical(field_, std::move(out));
}

std::string FpSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < elems_.size(); ++i) os << (i ? "," : "") << elems_[i];
  os << '}';
  return os.str();
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

u64 element_of_order(const Field& f, u64 d) {
  const u64 p = f.modulus();
  if (d == 0 || (p - 1) % d != 0) {
    throw std::invalid_argument(std::to_string(d) + " does not divide p-1 = " +
                                std::to_string(p - 1));
  }
  if (d == 1) return 1;
  const auto qs = prime_factors(d);
  const u64 cofactor = (p - 1) / d;
  for (u64 x = 2; x < p; ++x) {
    u64 h = f.pow(x, cofactor);
    bool ok = true;
    for (u64 q : qs) {
      if (f.pow(h, d / q) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return h;
  }
  throw std::logic_error("no element of the requested order");
}

FpSet roots_of_unity(const Field& f, u64 d) {
  const u64 h = element_of_order(f, d);
  std::vector<u64> out;
  out.reserve(d);
  u64 x = 1;
  for (u64 i = 0; i < d; ++i) {
    out.push_back(x);
    x = f.mul(x, h);
  }
  return FpSet::from_canonical(f, std::move(out));
}

FactorialTable::FactorialTable(const Field& f, u64 n) : field_(f) {
  if (n >= f.modulus()) throw std::invalid_argument("factorial table must stay below p");
  fact_.resize(n + 1);
  inv_fact_.resize(n + 1);
  fact_[0] = 1;
  for (u64 i = 1; i <= n; ++i) fact_[i] = f.mul(fact_[i - 1], i);
  inv_fact_[n] = f.inv(fact_[n]);
  for (u64 i = n; i > 0; --i) inv_fact_[i - 1] = f.mul(inv_fact_[i], i);
}

u64 FactorialTable::binom(u64 n, u64 k) const {
  if (k > n) return 0;
  return field_.mul(fact_.at(n), field_.mul(inv_fact_.at(k), inv_fact_.at(n - k)));
}

FieldElem binom_mod(i64 n, i64 k, const Field& f) {
  if (k < 0 || k > n) throw std::invalid_argument("binom_mod requires 0 <= K <= N");
  const u64 p = f.modulus();
  const u64 un = static_cast<u64>(n), uk = static_cast<u64>(k);
  if (un < p) {
    FactorialTable t(f, un);
    return FieldElem::from_canonical(f, t.binom(un, uk));
  }
  // Lucas: product of digit binomials in base p.
  u64 result = 1;
  u64 nn = un, kk = uk;
  while (kk > 0 || nn > 0) {
    const u64 nd = nn % p, kd = kk % p;
    if (kd > nd) return FieldElem::from_canonical(f, 0);
    u64 num = 1, den = 1;
    for (u64 i = 0; i < kd; ++i) {
      num = f.mul(num, nd - i);
      den = f.mul(den, i + 1);
    }
    result = f.mul(result, f.div(num, den));
    nn /= p;
    kk /= p;
  }
  return FieldElem::from_canonical(f, result);
}

std::vector<u64> batch_inverse(const Field& f, std::span<const u64> xs) {
  std::vector<u64> prefix(xs.size());
  u64 acc = 1;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] % f.modulus() == 0) throw std::domain_error("batch_inverse: zero entry");
    prefix[i] = acc;
    acc = f.mul(acc, xs[i] % f.modulus());
  }
  u64 inv = xs.empty() ? 1 : f.inv(acc);
  std::vector<u64> out(xs.size());
  for (std::size_t i = xs.size(); i-- > 0;) {
    out[i] = f.mul(inv, prefix[i]);
    inv = f.mul(inv, xs[i] % f.modulus());
  }
  return out;
}

std::vector<FieldElem> batch_inverse(std::span<const FieldElem> xs) {
  if (xs.empty()) return {};
  const Field f(xs.front().modulus());
  std::vector<u64> raw;
  raw.reserve(xs.size());
  for (const auto& x : xs) {
    if (x.modulus() != f.modulus()) throw std::invalid_argument("modulus mismatch");
    raw.push_back(x.value());
  }
  std::vector<FieldElem> out;
  out.reserve(xs.size());
  for (u64 v : batch_inverse(f, raw)) out.push_back(FieldElem::from_canonical(f, v));
  return out;
}

}  // namespace mucrit
