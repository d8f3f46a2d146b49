#include <doctest.h>

#include <random>

#include "mucrit/fp.hpp"
#include "oracles.hpp"

using namespace mucrit;

TEST_CASE("primality agrees with trial division") {
  CHECK(is_prime(41));
  CHECK_FALSE(is_prime(1025));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(17994001) == oracle::trial_division_prime(17994001));
  for (u64 n = 0; n < 5000; ++n) CHECK(is_prime(n) == oracle::trial_division_prime(n));
  CHECK(is_prime(18446744073709551557ULL));
  CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST_CASE("field rejects composite or oversized moduli") {
  CHECK_THROWS_AS(Field(15), std::invalid_argument);
  CHECK_THROWS_AS(Field(18446744073709551557ULL), std::invalid_argument);
  CHECK_NOTHROW(Field(1000003));
}

TEST_CASE("field elements") {
  Field f(7);
  FieldElem a(f, 3), b(f, -1);
  CHECK(b.value() == 6);
  CHECK((a * a.inverse()).value() == 1);
  CHECK((a / b).value() == 4);
  CHECK_THROWS_AS(FieldElem(f, 0).inverse(), std::domain_error);
  Field g(11);
  CHECK_THROWS_AS(a + FieldElem(g, 1), std::invalid_argument);

  std::mt19937_64 rng(1);
  Field big(1000003);
  for (int i = 0; i < 1000; ++i) {
    u64 x = rng() % (big.modulus() - 1) + 1;
    CHECK(big.mul(x, big.inv(x)) == 1);
  }
}

TEST_CASE("roots of unity") {
  Field f(13);
  CHECK(roots_of_unity(f, 6).values() == std::vector<u64>{1, 3, 4, 9, 10, 12});
  CHECK(roots_of_unity(f, 1).values() == std::vector<u64>{1});
  CHECK_THROWS_AS(roots_of_unity(f, 5), std::invalid_argument);

  Field g(41);
  std::vector<u64> squares;
  for (u64 x = 1; x < 41; ++x) squares.push_back(x * x % 41);
  CHECK(roots_of_unity(g, 20) == FpSet::from_canonical(g, squares));

  for (u64 p = 3; p <= 1000; ++p) {
    if (!is_prime(p)) continue;
    Field fp(p);
    for (u64 d = 1; d < p; ++d) {
      if ((p - 1) % d) continue;
      const FpSet mu = roots_of_unity(fp, d);
      REQUIRE(mu.size() == d);
      for (u64 x : mu) {
        CHECK(mu.contains(fp.inv(x)));
        CHECK(mu.contains(fp.mul(x, mu[mu.size() / 2])));
      }
    }
  }
}

TEST_CASE("binomials mod p") {
  Field f41(41);
  CHECK(binom_mod(24, 20, f41).value() == 7);
  CHECK(binom_mod(24, 0, f41).value() == 1);
  CHECK(binom_mod(8, 3, Field(3)).value() == 2);
  CHECK_THROWS_AS(binom_mod(3, 4, f41), std::invalid_argument);
  CHECK_THROWS_AS(binom_mod(3, -1, f41), std::invalid_argument);
  for (u64 p = 2; p <= 97; ++p) {
    if (!is_prime(p)) continue;
    Field f(p);
    for (long n = 0; n <= 60; ++n)
      for (long k = 0; k <= n; ++k)
        REQUIRE(binom_mod(n, k, f).value() == oracle::exact_binom_mod(n, k, p));
  }
}

TEST_CASE("batch inversion") {
  Field f(7);
  std::vector<u64> xs{2, 3};
  CHECK(batch_inverse(f, xs) == std::vector<u64>{4, 5});
  std::vector<u64> one{1};
  CHECK(batch_inverse(f, one) == std::vector<u64>{1});
  std::vector<u64> bad{2, 0};
  CHECK_THROWS_AS(batch_inverse(f, bad), std::domain_error);

  Field g(10007);
  std::mt19937_64 rng(2);
  std::vector<u64> many;
  for (int i = 0; i < 1000; ++i) many.push_back(rng() % 10006 + 1);
  const auto inv = batch_inverse(g, many);
  for (std::size_t i = 0; i < many.size(); ++i) CHECK(inv[i] == oracle::inv(many[i], 10007));

  std::vector<FieldElem> elems{FieldElem(f, 2), FieldElem(f, 3)};
  const auto ie = batch_inverse(elems);
  CHECK(ie[0].value() == 4);
  CHECK(ie[1].value() == 5);
}

TEST_CASE("FpSet operations") {
  Field f(41);
  FpSet a(f, {0, 1, 9, 32, 40});
  CHECK_THROWS_AS(FpSet(f, {0, 41}), std::invalid_argument);
  const FpSet diff = a.difference_set(a);
  CHECK(diff.size() == 13);
  FpSet mu0 = roots_of_unity(f, 20);
  for (u64 x : diff) CHECK((x == 0 || mu0.contains(x)));
  CHECK(a.negated().values() == std::vector<u64>{0, 1, 9, 32, 40});
  CHECK(a.shifted(1).contains(41 % 41 + 1));
  CHECK(a.scaled(2).size() == 5);
}
