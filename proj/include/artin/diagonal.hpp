#pragma once

// Power sums S_{h,m}(x) = sum_i x_i^{phi(p^h) m} and the block-diagonal
// systems built from them:
//
//   sum_{l=0}^{W-1} p^{l(h+1)M} S_{h,m}(x_{1l}, ..., x_{sl}) = 0   (m in set)
//
// with W = [phi(p^h)/(h+1)] blocks of s variables each.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "artin/bigint.hpp"
#include "artin/padic.hpp"

namespace artin::diagonal {

/// Parameters (p, h, M, set) with set a nonempty set of K distinct integers in
/// [M, 2M). When p = 2, h >= 3 is required. The set is stored sorted.
class PowerSumSpec {
 public:
  PowerSumSpec(BigInt p, std::uint64_t h, std::uint64_t M, std::vector<std::uint64_t> set);

  const BigInt& p() const { return p_; }
  std::uint64_t h() const { return h_; }
  std::uint64_t M() const { return M_; }
  const std::vector<std::uint64_t>& set() const { return set_; }
  std::uint64_t K() const { return set_.size(); }
  // phi(p^h), the common degree factor.
  const BigInt& phi() const { return phi_; }

  bool contains(std::uint64_t m) const;

 private:
  BigInt p_;
  std::uint64_t h_;
  std::uint64_t M_;
  std::vector<std::uint64_t> set_;
  BigInt phi_;
};

// {M, M+1, ..., M+r-1}: the r smallest integers of [M, 2M).
std::vector<std::uint64_t> default_degree_set(std::uint64_t M, std::uint64_t r);

/// sum_i x_i^{phi(p^h) m}, exact or reduced modulo `modulus`.
/// Throws DomainError when m is not in the spec's set or x is empty.
BigInt power_sum(const PowerSumSpec& spec, std::uint64_t m, std::span<const BigInt> x,
                 const std::optional<padic::PrimePowerModulus>& modulus = std::nullopt);

// W = [phi(p^h)/(h+1)].
BigInt block_count(const BigInt& p, std::uint64_t h);

// For h >= 5: W >= (p^{h-1}-h-1)/(h+1) >= p^{h-2}/(h+1), compared as exact
// rationals. Throws DomainError for h < 5.
bool block_count_lower_bounds_hold(const BigInt& p, std::uint64_t h);

class DiagonalSystem {
 public:
  const PowerSumSpec& spec() const { return spec_; }
  const BigInt& block_count() const { return W_; }
  const BigInt& variables_per_block() const { return s_; }
  BigInt total_variables() const { return W_ * s_; }

  // c_l = p^{l(h+1)M}; c_0 = 1.
  BigInt coefficient(std::uint64_t l) const;
  const BigInt& coefficient_ratio() const { return ratio_; }
  // All W coefficients. Throws ResourceError above kMaxMaterializedBlocks.
  std::vector<BigInt> coefficients() const;

  // d_m = phi(p^h) m, in set order.
  const std::vector<BigInt>& degrees() const { return degrees_; }

  static constexpr std::uint64_t kMaxMaterializedBlocks = 1U << 20;

 private:
  friend DiagonalSystem build_system(const PowerSumSpec& spec, const BigInt& s);
  DiagonalSystem(PowerSumSpec spec, BigInt W, BigInt s, BigInt ratio, std::vector<BigInt> degrees);

  PowerSumSpec spec_;
  BigInt W_;
  BigInt s_;
  BigInt ratio_;
  std::vector<BigInt> degrees_;
};

/// Throws DomainError when s < 1.
DiagonalSystem build_system(const PowerSumSpec& spec, const BigInt& s);

/// Left-hand sides of the system, one per m in the set.
///
/// x is flattened block-major: x[l*s + i] is variable x_{i+1,l}. Reduced modulo
/// `modulus` when given, exact otherwise.
std::vector<BigInt> evaluate_system(const DiagonalSystem& system, std::span<const BigInt> x,
                                    const std::optional<padic::PrimePowerModulus>& modulus);

// sum d_i^2. Throws DomainError on an empty list.
BigInt ac_threshold(std::span<const BigInt> degrees);

// total_variables > sum d_i^2 (strict).
bool ac_predicts_solubility(const BigInt& total_variables, std::span<const BigInt> degrees);

}  // namespace artin::diagonal
