#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace mucrit {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

/// Deterministic primality test for every 64-bit integer (Miller-Rabin with the
/// first twelve prime bases).
bool is_prime(u64 n);

/// Arithmetic context for the prime field F_p. Values are plain u64 residues in
/// [0, p); the context owns the modulus and validates it once.
class Field {
 public:
  /// Throws std::invalid_argument unless p is a prime below 2^63.
  explicit Field(u64 p);

  u64 modulus() const noexcept { return p_; }

  u64 reduce(i64 x) const noexcept {
    i64 r = x % static_cast<i64>(p_);
    return static_cast<u64>(r < 0 ? r + static_cast<i64>(p_) : r);
  }
  u64 reduce_u(u64 x) const noexcept { return x % p_; }

  u64 add(u64 a, u64 b) const noexcept {
    u64 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  u64 sub(u64 a, u64 b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  u64 neg(u64 a) const noexcept { return a == 0 ? 0 : p_ - a; }
  u64 mul(u64 a, u64 b) const noexcept {
    return static_cast<u64>((static_cast<u128>(a) * b) % p_);
  }
  u64 pow(u64 a, u64 e) const noexcept;
  /// Throws std::domain_error on zero.
  u64 inv(u64 a) const;
  u64 div(u64 a, u64 b) const { return mul(a, inv(b)); }

  bool operator==(const Field& o) const noexcept { return p_ == o.p_; }

 private:
  u64 p_;
};

/// A residue together with its modulus. Mixing moduli throws.
class FieldElem {
 public:
  FieldElem(const Field& f, i64 value) : p_(f.modulus()), v_(f.reduce(value)) {}
  static FieldElem from_canonical(const Field& f, u64 v);

  u64 modulus() const noexcept { return p_; }
  u64 value() const noexcept { return v_; }
  Field field() const { return Field(p_); }

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem inverse() const;
  FieldElem pow(u64 e) const;

  bool operator==(const FieldElem& o) const noexcept = default;

 private:
  FieldElem(u64 p, u64 v, int) : p_(p), v_(v) {}
  void check_same(const FieldElem& o) const;

  u64 p_;
  u64 v_;
};

std::ostream& operator<<(std::ostream& os, const FieldElem& x);

/// Sorted, duplicate-free set of residues over one modulus.
class FpSet {
 public:
  explicit FpSet(const Field& f) : field_(f) {}
  /// Reduces every value mod p; throws std::invalid_argument if two values
  /// collide after reduction.
  FpSet(const Field& f, std::span<const i64> values);
  FpSet(const Field& f, std::initializer_list<i64> values);
  /// Values must already be canonical; duplicates are merged.
  static FpSet from_canonical(const Field& f, std::vector<u64> values);

  const Field& field() const noexcept { return field_; }
  u64 modulus() const noexcept { return field_.modulus(); }
  std::size_t size() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }
  const std::vector<u64>& values() const noexcept { return elems_; }
  auto begin() const noexcept { return elems_.begin(); }
  auto end() const noexcept { return elems_.end(); }
  u64 operator[](std::size_t i) const { return elems_[i]; }

  bool contains(u64 x) const;
  FpSet negated() const;
  FpSet shifted(u64 t) const;
  FpSet scaled(u64 c) const;
  /// {x - y : x in *this, y in other}
  FpSet difference_set(const FpSet& other) const;
  FpSet sumset(const FpSet& other) const;
  FpSet intersection(const FpSet& other) const;

  std::string to_string() const;

  bool operator==(const FpSet& o) const noexcept {
    return field_ == o.field_ && elems_ == o.elems_;
  }

 private:
  Field field_;
  std::vector<u64> elems_;
};

/// mu_d = {x : x^d = 1}; throws std::invalid_argument unless d | p-1.
FpSet roots_of_unity(const Field& f, u64 d);

/// Element of exact order d (d | p-1).
u64 element_of_order(const Field& f, u64 d);

/// Distinct prime factors by trial division.
std::vector<u64> prime_factors(u64 n);

/// Factorials and inverse factorials mod p up to n < p.
class FactorialTable {
 public:
  FactorialTable(const Field& f, u64 n);
  u64 factorial(u64 k) const { return fact_.at(k); }
  u64 inverse_factorial(u64 k) const { return inv_fact_.at(k); }
  /// C(n, k) for 0 <= k <= n <= limit; zero for k > n.
  u64 binom(u64 n, u64 k) const;
  u64 limit() const noexcept { return fact_.size() - 1; }

 private:
  Field field_;
  std::vector<u64> fact_;
  std::vector<u64> inv_fact_;
};

/// C(N, K) mod p: factorial table for N < p, base-p digit product otherwise.
/// Throws std::invalid_argument for K < 0 or K > N.
FieldElem binom_mod(i64 n, i64 k, const Field& f);

/// Elementwise inverses with a single field inversion. Throws
/// std::domain_error on a zero entry.
std::vector<u64> batch_inverse(const Field& f, std::span<const u64> xs);
std::vector<FieldElem> batch_inverse(std::span<const FieldElem> xs);

}  // namespace mucrit
