#include "artin/padic.hpp"

#include <map>
#include <stdexcept>

#include "artin/errors.hpp"

namespace artin::padic {

namespace {

void require_prime(const BigInt& p, const char* who) {
  if (!is_prime(p)) {
    throw DomainError(std::string(who) + ": " + p.str() + " is not prime");
  }
}

std::int64_t strip_factor(BigInt& n, const BigInt& p) {
  std::int64_t count = 0;
  while (true) {
    BigInt q;
    BigInt r;
    boost::multiprecision::divide_qr(n, p, q, r);
    if (r != 0) break;
    n = std::move(q);
    ++count;
  }
  return count;
}

// Solve base^d = target with 0 <= d < order, where base has prime order `order`.
std::uint64_t bsgs(const BigInt& base, const BigInt& target, std::uint64_t order,
                   const BigInt& modulus) {
  std::uint64_t m = 1;
  while (m * m < order) ++m;

  std::map<BigInt, std::uint64_t> baby;
  BigInt cur = 1;
  for (std::uint64_t j = 0; j < m; ++j) {
    baby.emplace(cur, j);
    cur = cur * base % modulus;
  }
  // base^{-m} = base^{order - (m mod order)}
  const BigInt giant = pow_mod(base, BigInt((order - m % order) % order), modulus);
  BigInt y = target;
  for (std::uint64_t i = 0; i <= m; ++i) {
    if (auto it = baby.find(y); it != baby.end()) {
      const std::uint64_t d = i * m + it->second;
      if (d < order) return d;
    }
    y = y * giant % modulus;
  }
  throw std::logic_error("bsgs: target outside the subgroup generated by base");
}

}  // namespace

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (BigInt d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<BigInt, std::uint64_t>> factorize(BigInt n) {
  if (n < 1) throw DomainError("factorize: argument must be positive");
  std::vector<std::pair<BigInt, std::uint64_t>> out;
  for (BigInt d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      const auto e = static_cast<std::uint64_t>(strip_factor(n, d));
      out.emplace_back(d, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

PrimePowerModulus::PrimePowerModulus(BigInt p, std::uint64_t k) : p_(std::move(p)), k_(k) {
  require_prime(p_, "PrimePowerModulus");
  if (k_ < 1) throw DomainError("PrimePowerModulus: exponent must be >= 1");
  value_ = ipow(p_, k_);
}

std::int64_t Valuation::value() const {
  if (infinite_) throw std::logic_error("Valuation::value on INFINITY");
  return value_;
}

Valuation operator+(const Valuation& a, const Valuation& b) {
  if (a.infinite_ || b.infinite_) return Valuation::infinity();
  return Valuation(a.value_ + b.value_);
}

std::string Valuation::to_string() const {
  return infinite_ ? std::string("infinity") : std::to_string(value_);
}

Valuation ord(const BigInt& n, const BigInt& p) { return ord(n, BigInt(1), p); }

Valuation ord(const BigInt& numerator, const BigInt& denominator, const BigInt& p) {
  require_prime(p, "ord");
  if (denominator == 0) throw DomainError("ord: zero denominator");
  if (numerator == 0) return Valuation::infinity();
  BigInt num = abs(numerator);
  BigInt den = abs(denominator);
  return Valuation(strip_factor(num, p) - strip_factor(den, p));
}

BigInt euler_phi_prime_power(const BigInt& p, std::uint64_t h) {
  require_prime(p, "euler_phi_prime_power");
  if (h < 1) throw DomainError("euler_phi_prime_power: h must be >= 1");
  return ipow(p, h - 1) * (p - 1);
}

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
  BigInt old_r = mod_floor(a, m);
  BigInt r = m;
  BigInt old_s = 1;
  BigInt s = 0;
  while (r != 0) {
    const BigInt q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) {
    throw DomainError("mod_inverse: " + a.str() + " is not invertible mod " + m.str());
  }
  return mod_floor(old_s, m);
}

BigInt pow_mod(const BigInt& base, const BigInt& exp, const BigInt& modulus) {
  if (modulus < 2) throw DomainError("pow_mod: modulus must be >= 2");
  if (exp < 0) throw DomainError("pow_mod: negative exponent");
  return boost::multiprecision::powm(mod_floor(base, modulus), exp, modulus);
}

BigInt pow_mod(const BigInt& base, const BigInt& exp, const PrimePowerModulus& modulus) {
  return pow_mod(base, exp, modulus.value());
}

bool is_primitive_root(const BigInt& g, const PrimePowerModulus& modulus) {
  const BigInt& p = modulus.prime();
  if (p == 2) throw DomainError("is_primitive_root: units mod 2^k are not cyclic for k >= 3");
  if (g % p == 0) return false;
  const BigInt order = euler_phi_prime_power(p, modulus.exponent());
  for (const auto& [ell, e] : factorize(order)) {
    (void)e;
    if (pow_mod(g, order / ell, modulus) == 1) return false;
  }
  return true;
}

BigInt primitive_root(const BigInt& p) {
  require_prime(p, "primitive_root");
  if (p == 2) throw DomainError("primitive_root: p = 2 has no primitive root mod 4k; use unit_decomposition_2k");
  const PrimePowerModulus mod_p2(p, 2);
  for (BigInt g = 2;; ++g) {
    if (is_primitive_root(g, mod_p2)) return g;
  }
}

BigInt discrete_log(const BigInt& x, const BigInt& g, const PrimePowerModulus& modulus) {
  const BigInt& p = modulus.prime();
  const BigInt& n = modulus.value();
  if (p == 2) throw DomainError("discrete_log: p = 2; use unit_decomposition_2k");
  if (x % p == 0) throw DomainError("discrete_log: " + x.str() + " is not a unit mod " + n.str());
  if (!is_primitive_root(g, modulus)) {
    throw DomainError("discrete_log: " + g.str() + " is not primitive mod " + n.str());
  }
  const BigInt xr = mod_floor(x, n);
  const BigInt order = euler_phi_prime_power(p, modulus.exponent());
  const BigInt g_inv = pow_mod(g, order - 1, n);

  BigInt result = 0;
  BigInt combined = 1;
  for (const auto& [ell, e] : factorize(order)) {
    const std::uint64_t ell_small = to_u64(ell, "discrete_log prime factor");
    const BigInt gamma = pow_mod(g, order / ell, n);
    BigInt digit_sum = 0;
    BigInt ell_i = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
      // (x * g^{-digit_sum})^{order / ell^{i+1}} lies in the subgroup of order ell.
      const BigInt shifted = xr * pow_mod(g_inv, digit_sum, n) % n;
      const BigInt t = pow_mod(shifted, order / (ell_i * ell), n);
      digit_sum += ell_i * bsgs(gamma, t, ell_small, n);
      ell_i *= ell;
    }
    // CRT: result mod combined, digit_sum mod ell^e.
    const BigInt& pe = ell_i;
    const BigInt lift = mod_floor((digit_sum - result) * mod_inverse(combined % pe, pe), pe);
    result += combined * lift;
    combined *= pe;
  }
  return mod_floor(result, order);
}

UnitDecomposition2k unit_decomposition_2k(const BigInt& x, std::uint64_t k) {
  if (k < 3) throw DomainError("unit_decomposition_2k: k must be >= 3");
  if (x % 2 == 0) throw DomainError("unit_decomposition_2k: " + x.str() + " is even");
  const BigInt n = ipow(BigInt(2), k);
  const BigInt xr = mod_floor(x, n);

  UnitDecomposition2k out;
  out.epsilon = (xr % 4 == 1) ? 0 : 1;
  const BigInt y = out.epsilon == 0 ? xr : n - xr;  // y = 1 mod 4, y in <5>

  const BigInt five_order = ipow(BigInt(2), k - 2);
  const BigInt five_inv = pow_mod(BigInt(5), five_order - 1, n);
  BigInt a = 0;
  for (std::uint64_t i = 0; i + 2 < k; ++i) {
    const BigInt t = y * pow_mod(five_inv, a, n) % n;
    if (pow_mod(t, ipow(BigInt(2), k - 3 - i), n) != 1) a += ipow(BigInt(2), i);
  }
  out.exponent = a;
  return out;
}

std::uint64_t factorial_valuation(std::uint64_t n, const BigInt& p) {
  require_prime(p, "factorial_valuation");
  std::uint64_t total = 0;
  BigInt power = p;
  while (power <= n) {
    total += static_cast<std::uint64_t>(BigInt(n / power));
    power *= p;
  }
  return total;
}

Valuation ord_power_minus_one(const BigInt& g, const BigInt& q, const BigInt& s,
                              const BigInt& p, std::uint64_t h) {
  require_prime(p, "ord_power_minus_one");
  if (p == 2) throw DomainError("ord_power_minus_one: p must be odd");
  if (s < 1) throw DomainError("ord_power_minus_one: s must be positive");
  const BigInt phi = euler_phi_prime_power(p, h);
  if (q < 1 || q % phi != 0) {
    throw DomainError("ord_power_minus_one: q must be a positive multiple of phi(p^h) = " +
                      phi.str());
  }
  if (!is_primitive_root(g, PrimePowerModulus(p, 2))) {
    throw DomainError("ord_power_minus_one: " + g.str() + " is not primitive mod p^2");
  }
  const BigInt exponent = q * s;
  for (std::uint64_t precision = h + 8;; precision *= 2) {
    const BigInt modulus = ipow(p, precision);
    const BigInt residue = mod_floor(pow_mod(g, exponent, modulus) - 1, modulus);
    if (residue != 0) return ord(residue, p);
  }
}

}  // namespace artin::padic
