#include <array>
#include <random>
#include <set>

#include "doctest.h"

#include "artin/errors.hpp"
#include "artin/padic.hpp"
#include "oracles.hpp"

using namespace artin;
using namespace artin::padic;

TEST_SUITE("padic") {

TEST_CASE("primality and modulus construction") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  const PrimePowerModulus m(3, 4);
  CHECK(m.value() == 81);
  CHECK(PrimePowerModulus(2, 100).value() == ipow(BigInt(2), 100));
  CHECK_THROWS_AS(PrimePowerModulus(4, 2), DomainError);
  CHECK_THROWS_AS(PrimePowerModulus(3, 0), DomainError);
}

TEST_CASE("ord examples") {
  CHECK(ord(9, 3) == Valuation(2));
  CHECK(ord(0, 5).is_infinite());
  CHECK(ord(63, 3) == Valuation(2));
  CHECK(ord(9, 4, 2) == Valuation(-2));
  CHECK(ord(-18, 1, 3) == Valuation(2));
  CHECK_THROWS_AS(ord(1, 0, 3), DomainError);
  CHECK_THROWS_AS(ord(9, 6), DomainError);
}

TEST_CASE("valuation ordering treats infinity as the top element") {
  CHECK(Valuation::infinity() > Valuation(1000000));
  CHECK(Valuation(3) < Valuation(4));
  CHECK((Valuation(2) + Valuation::infinity()).is_infinite());
  CHECK(Valuation(2) + Valuation(5) == Valuation(7));
  CHECK(Valuation::infinity().to_string() == "infinity");
  CHECK_THROWS_AS((void)Valuation::infinity().value(), std::logic_error);
}

TEST_CASE("ord strips exactly the p-part") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const BigInt p = std::array<int, 3>{2, 3, 5}[i % 3];
    const BigInt n = BigInt(static_cast<std::int64_t>(rng() % 20000)) - 10000;
    if (n == 0) continue;
    const auto v = ord(n, p).value();
    REQUIRE(v == oracle::ord_by_division(n, p));
    const BigInt rest = n / ipow(p, static_cast<std::uint64_t>(v));
    CHECK(rest * ipow(p, static_cast<std::uint64_t>(v)) == n);
    CHECK(rest % p != 0);
  }
}

TEST_CASE("ord is additive on nonzero rationals") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const BigInt p = std::array<int, 3>{2, 3, 5}[i % 3];
    auto draw = [&] { return BigInt(static_cast<std::int64_t>(rng() % 5000) + 1); };
    const BigInt a_num = draw(), a_den = draw();
    const BigInt b_num = draw(), b_den = draw();
    CHECK(ord(a_num * b_num, a_den * b_den, p) == ord(a_num, a_den, p) + ord(b_num, b_den, p));
  }
}

TEST_CASE("euler phi of prime powers") {
  CHECK(euler_phi_prime_power(3, 1) == 2);
  CHECK(euler_phi_prime_power(3, 2) == 6);
  CHECK(euler_phi_prime_power(2, 6) == 32);
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (std::uint64_t h = 1; ipow(BigInt(p), h) < 3000; ++h) {
      const auto n = ipow(BigInt(p), h).convert_to<std::uint64_t>();
      CHECK(euler_phi_prime_power(p, h) == oracle::count_units(n));
    }
  }
  CHECK_THROWS_AS(euler_phi_prime_power(3, 0), DomainError);
  CHECK_THROWS_AS(euler_phi_prime_power(9, 1), DomainError);
}

TEST_CASE("least primitive root") {
  CHECK(primitive_root(3) == 2);
  CHECK(primitive_root(5) == 2);
  CHECK(primitive_root(7) == 3);
  for (std::uint64_t p = 3; p < 60; ++p) {
    if (!is_prime(p)) continue;
    CAPTURE(p);
    CHECK(primitive_root(p) == oracle::least_generator(p));
  }
  CHECK_THROWS_AS(primitive_root(2), DomainError);
  CHECK_THROWS_AS(primitive_root(15), DomainError);
}

TEST_CASE("pow_mod") {
  CHECK(pow_mod(2, 6, PrimePowerModulus(3, 2)) == 1);
  CHECK(pow_mod(12345, 0, PrimePowerModulus(5, 3)) == 1);
  CHECK(pow_mod(7, 4, PrimePowerModulus(2, 4)) == 1);
  CHECK(pow_mod(-2, 3, PrimePowerModulus(3, 2)) == 1);  // -8 = 1 mod 9
  CHECK_THROWS_AS(pow_mod(2, 3, BigInt(1)), DomainError);
}

TEST_CASE("discrete_log examples and errors") {
  const PrimePowerModulus nine(3, 2);
  CHECK(discrete_log(7, 2, nine) == 4);
  CHECK(discrete_log(1, 2, nine) == 0);
  CHECK(discrete_log(2, 2, nine) == 1);
  CHECK(discrete_log(-2, 2, nine) == 4);  // -2 = 7 mod 9
  CHECK_THROWS_AS(discrete_log(3, 2, nine), DomainError);
  CHECK_THROWS_AS(discrete_log(2, 4, nine), DomainError);  // 4 = 2^2 has order 3
  CHECK_THROWS_AS(discrete_log(3, 3, PrimePowerModulus(2, 4)), DomainError);
}

TEST_CASE("discrete_log matches enumeration and round-trips") {
  for (std::uint64_t p : {3, 5, 7}) {
    const BigInt g = primitive_root(p);
    for (std::uint64_t k = 1; ipow(BigInt(p), k) <= 400; ++k) {
      const PrimePowerModulus modulus(p, k);
      const auto n = modulus.value().convert_to<std::uint64_t>();
      for (std::uint64_t x = 1; x < n; ++x) {
        if (x % p == 0) continue;
        const BigInt a = discrete_log(x, g, modulus);
        REQUIRE(a < euler_phi_prime_power(p, k));
        CHECK(pow_mod(g, a, modulus) == x);
        CHECK(a == *oracle::log_by_enumeration(x, g.convert_to<std::uint64_t>(), n));
      }
    }
  }
}

TEST_CASE("unit_decomposition_2k") {
  CHECK(unit_decomposition_2k(7, 4) == UnitDecomposition2k{1, 2});
  CHECK(unit_decomposition_2k(1, 4) == UnitDecomposition2k{0, 0});
  CHECK(unit_decomposition_2k(5, 4) == UnitDecomposition2k{0, 1});
  CHECK_THROWS_AS(unit_decomposition_2k(6, 4), DomainError);
  CHECK_THROWS_AS(unit_decomposition_2k(3, 2), DomainError);

  for (std::uint64_t k = 3; k <= 10; ++k) {
    const BigInt n = ipow(BigInt(2), k);
    const BigInt half_order = ipow(BigInt(2), k - 2);
    std::set<std::pair<int, BigInt>> seen;
    for (BigInt x = 1; x < n; x += 2) {
      const auto d = unit_decomposition_2k(x, k);
      REQUIRE(d.exponent < half_order);
      const BigInt sign = d.epsilon == 0 ? BigInt(1) : n - 1;
      CHECK(sign * pow_mod(5, d.exponent, n) % n == x);
      seen.emplace(d.epsilon, d.exponent);
    }
    CHECK(seen.size() == n / 2);  // uniqueness
  }
}

TEST_CASE("factorial_valuation") {
  CHECK(factorial_valuation(4, 2) == 3);
  CHECK(factorial_valuation(0, 3) == 0);
  CHECK(factorial_valuation(8, 3) == 2);
  for (std::uint64_t p : {2, 3, 5}) {
    for (std::uint64_t n = 0; n <= 30; ++n) {
      CHECK(factorial_valuation(n, p) ==
            static_cast<std::uint64_t>(oracle::ord_by_division(oracle::factorial(n), p)));
    }
  }
}

TEST_CASE("ord_power_minus_one") {
  CHECK(ord_power_minus_one(2, 2, 1, 3, 1) == Valuation(1));
  CHECK(ord_power_minus_one(2, 2, 3, 3, 1) == Valuation(2));
  CHECK(ord_power_minus_one(2, 6, 1, 3, 2) == Valuation(2));
  CHECK_THROWS_AS(ord_power_minus_one(3, 2, 1, 2, 1), DomainError);
  CHECK_THROWS_AS(ord_power_minus_one(2, 3, 1, 3, 1), DomainError);  // q not a multiple of phi
  CHECK_THROWS_AS(ord_power_minus_one(4, 2, 1, 3, 1), DomainError);  // 4 not primitive mod 9

  for (std::uint64_t p : {3, 5}) {
    const BigInt g = primitive_root(p);
    for (std::uint64_t h : {1, 2}) {
      const BigInt q = euler_phi_prime_power(p, h);
      for (std::uint64_t s = 1; s <= 50; ++s) {
        const auto expected = static_cast<std::int64_t>(h) + oracle::ord_by_division(s, p);
        CHECK(ord_power_minus_one(g, q, s, p, h) == Valuation(expected));
        CHECK(oracle::ord_by_division(ipow(g, (q * s).convert_to<std::uint64_t>()) - 1, p) ==
              expected);
      }
    }
  }
}

TEST_CASE("ord_power_minus_one escalates precision past the initial headroom") {
  // s = 3^12 puts the valuation at h + 12, beyond T = h + 8.
  const BigInt s = ipow(BigInt(3), 12);
  CHECK(ord_power_minus_one(2, 2, s, 3, 1) == Valuation(13));
}

}  // TEST_SUITE
