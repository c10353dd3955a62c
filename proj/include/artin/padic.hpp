#pragma once

// p-adic valuations and unit-group arithmetic modulo prime powers.
//
// Everything here is exact (arbitrary precision) and pure. Residues are
// returned as least nonnegative representatives.

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "artin/bigint.hpp"

namespace artin::padic {

// Deterministic trial division up to the square root.
bool is_prime(const BigInt& n);

// Distinct prime factors of n >= 1 in increasing order, with multiplicity.
std::vector<std::pair<BigInt, std::uint64_t>> factorize(BigInt n);

/// The ring Z/p^k. Construction validates that p is prime and k >= 1.
class PrimePowerModulus {
 public:
  PrimePowerModulus(BigInt p, std::uint64_t k);

  const BigInt& prime() const { return p_; }
  std::uint64_t exponent() const { return k_; }
  const BigInt& value() const { return value_; }

 private:
  BigInt p_;
  std::uint64_t k_;
  BigInt value_;
};

/// ord_p of a rational, or INFINITY for zero. INFINITY compares above every
/// finite value; addition saturates at INFINITY.
class Valuation {
 public:
  constexpr explicit Valuation(std::int64_t value) : value_(value), infinite_(false) {}

  static constexpr Valuation infinity() { return Valuation(); }

  constexpr bool is_infinite() const { return infinite_; }
  // Throws std::logic_error when infinite.
  std::int64_t value() const;

  friend constexpr bool operator==(const Valuation&, const Valuation&) = default;
  friend constexpr std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }
  friend Valuation operator+(const Valuation& a, const Valuation& b);

  // "infinity" or the decimal value.
  std::string to_string() const;

 private:
  constexpr Valuation() : value_(0), infinite_(true) {}

  std::int64_t value_;
  bool infinite_;
};

/// x = (-1)^epsilon * 5^exponent (mod 2^k), 0 <= exponent < 2^{k-2}.
struct UnitDecomposition2k {
  int epsilon = 0;
  BigInt exponent;

  friend bool operator==(const UnitDecomposition2k&, const UnitDecomposition2k&) = default;
};

Valuation ord(const BigInt& n, const BigInt& p);
// ord_p(numerator / denominator); throws DomainError for a zero denominator.
Valuation ord(const BigInt& numerator, const BigInt& denominator, const BigInt& p);

// p^{h-1}(p-1).
BigInt euler_phi_prime_power(const BigInt& p, std::uint64_t h);

// Inverse of a modulo m; throws DomainError when gcd(a, m) != 1.
BigInt mod_inverse(const BigInt& a, const BigInt& m);

// base^exp mod modulus; negative bases are reduced first. modulus >= 2.
BigInt pow_mod(const BigInt& base, const BigInt& exp, const BigInt& modulus);
BigInt pow_mod(const BigInt& base, const BigInt& exp, const PrimePowerModulus& modulus);

// True when g generates the (cyclic) unit group mod p^k, p odd.
bool is_primitive_root(const BigInt& g, const PrimePowerModulus& modulus);

/// Least g >= 2 generating the units mod p^2, and hence mod every p^k.
/// Throws DomainError for p = 2 or composite p.
BigInt primitive_root(const BigInt& p);

/// The unique a in [0, phi(p^k)) with g^a = x (mod p^k).
///
/// Pohlig-Hellman over the prime factors of phi(p^k), solving each digit
/// with baby-step/giant-step in the subgroup of prime order.
BigInt discrete_log(const BigInt& x, const BigInt& g, const PrimePowerModulus& modulus);

UnitDecomposition2k unit_decomposition_2k(const BigInt& x, std::uint64_t k);

// ord_p(n!) via the Legendre sum.
std::uint64_t factorial_valuation(std::uint64_t n, const BigInt& p);

/// ord_p(g^{qs} - 1) for p odd, g primitive mod p^2 and q a positive multiple
/// of phi(p^h). The residue is read at modulus p^T, starting at T = h + 8 and
/// doubling T whenever the residue vanishes.
Valuation ord_power_minus_one(const BigInt& g, const BigInt& q, const BigInt& s,
                              const BigInt& p, std::uint64_t h);

}  // namespace artin::padic
