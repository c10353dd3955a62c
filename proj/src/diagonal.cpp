#include "artin/diagonal.hpp"

#include <algorithm>
#include <stdexcept>

#include "artin/errors.hpp"

namespace artin::diagonal {

PowerSumSpec::PowerSumSpec(BigInt p, std::uint64_t h, std::uint64_t M,
                           std::vector<std::uint64_t> set)
    : p_(std::move(p)), h_(h), M_(M), set_(std::move(set)) {
  if (!padic::is_prime(p_)) throw DomainError("PowerSumSpec: " + p_.str() + " is not prime");
  if (h_ < 1) throw DomainError("PowerSumSpec: h must be >= 1");
  if (M_ < 1) throw DomainError("PowerSumSpec: M must be >= 1");
  if (p_ == 2 && h_ < 3) throw DomainError("PowerSumSpec: p = 2 requires h >= 3");
  if (set_.empty()) throw DomainError("PowerSumSpec: degree set must be nonempty");
  std::sort(set_.begin(), set_.end());
  if (std::adjacent_find(set_.begin(), set_.end()) != set_.end()) {
    throw DomainError("PowerSumSpec: degree set has repeated entries");
  }
  for (const auto m : set_) {
    if (m < M_ || m >= 2 * M_) {
      throw DomainError("PowerSumSpec: " + std::to_string(m) + " lies outside [M, 2M) = [" +
                        std::to_string(M_) + ", " + std::to_string(2 * M_) + ")");
    }
  }
  phi_ = padic::euler_phi_prime_power(p_, h_);
}

bool PowerSumSpec::contains(std::uint64_t m) const {
  return std::binary_search(set_.begin(), set_.end(), m);
}

std::vector<std::uint64_t> default_degree_set(std::uint64_t M, std::uint64_t r) {
  if (r > M) {
    throw DomainError("default_degree_set: [M, 2M) holds only " + std::to_string(M) +
                      " integers, cannot pick r = " + std::to_string(r));
  }
  std::vector<std::uint64_t> out(r);
  for (std::uint64_t i = 0; i < r; ++i) out[i] = M + i;
  return out;
}

BigInt power_sum(const PowerSumSpec& spec, std::uint64_t m, std::span<const BigInt> x,
                 const std::optional<padic::PrimePowerModulus>& modulus) {
  if (!spec.contains(m)) {
    throw DomainError("power_sum: m = " + std::to_string(m) + " is not in the degree set");
  }
  if (x.empty()) throw DomainError("power_sum: empty variable list");
  const BigInt degree = spec.phi() * m;
  BigInt total = 0;
  if (modulus) {
    const BigInt& n = modulus->value();
    for (const auto& xi : x) total += padic::pow_mod(xi, degree, n);
    return total % n;
  }
  const auto e = to_u64(degree, "power_sum degree");
  for (const auto& xi : x) total += ipow(xi, e);
  return total;
}

BigInt block_count(const BigInt& p, std::uint64_t h) {
  return padic::euler_phi_prime_power(p, h) / (h + 1);
}

bool block_count_lower_bounds_hold(const BigInt& p, std::uint64_t h) {
  if (h < 5) throw DomainError("block_count_lower_bounds_hold: requires h >= 5");
  const BigInt W = block_count(p, h);
  const BigInt middle_numerator = ipow(p, h - 1) - (h + 1);
  // W >= middle/(h+1)  <=>  W(h+1) >= middle numerator; same denominator for the right.
  return W * (h + 1) >= middle_numerator && middle_numerator >= ipow(p, h - 2);
}

DiagonalSystem::DiagonalSystem(PowerSumSpec spec, BigInt W, BigInt s, BigInt ratio,
                               std::vector<BigInt> degrees)
    : spec_(std::move(spec)),
      W_(std::move(W)),
      s_(std::move(s)),
      ratio_(std::move(ratio)),
      degrees_(std::move(degrees)) {}

BigInt DiagonalSystem::coefficient(std::uint64_t l) const {
  if (l >= W_) throw DomainError("coefficient: block index out of range");
  return ipow(ratio_, l);
}

std::vector<BigInt> DiagonalSystem::coefficients() const {
  if (W_ > kMaxMaterializedBlocks) {
    throw ResourceError("coefficients: W = " + W_.str() + " exceeds the materialization cap of " +
                        std::to_string(kMaxMaterializedBlocks));
  }
  const auto w = W_.convert_to<std::uint64_t>();
  std::vector<BigInt> out;
  out.reserve(w);
  BigInt c = 1;
  for (std::uint64_t l = 0; l < w; ++l) {
    out.push_back(c);
    c *= ratio_;
  }
  return out;
}

DiagonalSystem build_system(const PowerSumSpec& spec, const BigInt& s) {
  if (s < 1) throw DomainError("build_system: s must be >= 1");
  const auto h = spec.h();
  BigInt W = block_count(spec.p(), h);
  // phi - (h+1)(W-1) >= h+1 follows from the floor; a failure is an arithmetic bug.
  if (W < 1 || spec.phi() - (h + 1) * (W - 1) < h + 1) {
    throw std::logic_error("build_system: block count invariant violated");
  }
  BigInt ratio = ipow(spec.p(), (h + 1) * spec.M());
  std::vector<BigInt> degrees;
  degrees.reserve(spec.K());
  for (const auto m : spec.set()) degrees.emplace_back(spec.phi() * m);
  return DiagonalSystem(spec, std::move(W), s, std::move(ratio), std::move(degrees));
}

std::vector<BigInt> evaluate_system(const DiagonalSystem& system, std::span<const BigInt> x,
                                    const std::optional<padic::PrimePowerModulus>& modulus) {
  if (BigInt(x.size()) != system.total_variables()) {
    throw DomainError("evaluate_system: expected " + system.total_variables().str() +
                      " variables, got " + std::to_string(x.size()));
  }
  const auto& spec = system.spec();
  const auto s = system.variables_per_block().convert_to<std::size_t>();
  const auto W = system.block_count().convert_to<std::uint64_t>();

  std::vector<BigInt> out;
  out.reserve(spec.K());
  for (const auto m : spec.set()) {
    BigInt total = 0;
    BigInt c = 1;
    for (std::uint64_t l = 0; l < W; ++l) {
      const auto block = x.subspan(l * s, s);
      total += c * power_sum(spec, m, block, modulus);
      c *= system.coefficient_ratio();
      if (modulus) {
        total %= modulus->value();
        c %= modulus->value();
      }
    }
    out.push_back(std::move(total));
  }
  return out;
}

BigInt ac_threshold(std::span<const BigInt> degrees) {
  if (degrees.empty()) throw DomainError("ac_threshold: empty degree list");
  BigInt total = 0;
  for (const auto& d : degrees) total += d * d;
  return total;
}

bool ac_predicts_solubility(const BigInt& total_variables, std::span<const BigInt> degrees) {
  return total_variables > ac_threshold(degrees);
}

}  // namespace artin::diagonal
