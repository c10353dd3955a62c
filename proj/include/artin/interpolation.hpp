#pragma once

// Empirical checks of the p-adic interpolation bound
//
//   ord f(a) >= min{Kh, (K-1)h - L + M}
//
// for f in Z[z] vanishing mod p^M at K distinct nodes n_k = a (mod p^h), where
// L = max_k ord prod_{j != k} (n_j - n_k). A violated bound means a bug here,
// never a counterexample: the inequality is a theorem.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "artin/bigint.hpp"
#include "artin/diagonal.hpp"
#include "artin/padic.hpp"

namespace artin::interp {

inline constexpr std::size_t kDefaultDegreeCap = 64;

/// Dense integer polynomial, coefficients in ascending degree. Trailing zero
/// coefficients are trimmed; the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);

  // prod_k (z - roots[k])
  static IntPolynomial from_roots(std::span<const BigInt> roots);

  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  // -1 for the zero polynomial.
  std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }

  BigInt evaluate(const BigInt& z) const;
  BigInt evaluate_mod(const BigInt& z, const BigInt& modulus) const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const BigInt& c, const IntPolynomial& a);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// (p, h, a, nodes, f, M). Construction validates distinct nodes, every
/// n_k = a (mod p^h), every f(n_k) = 0 (mod p^M), and deg f <= degree_cap.
class InterpolationInstance {
 public:
  InterpolationInstance(BigInt p, std::uint64_t h, BigInt a, std::vector<BigInt> nodes,
                        IntPolynomial f, std::uint64_t M,
                        std::size_t degree_cap = kDefaultDegreeCap);

  const BigInt& p() const { return p_; }
  std::uint64_t h() const { return h_; }
  const BigInt& a() const { return a_; }
  const std::vector<BigInt>& nodes() const { return nodes_; }
  const IntPolynomial& f() const { return f_; }
  std::uint64_t M() const { return M_; }
  std::uint64_t K() const { return nodes_.size(); }

 private:
  BigInt p_;
  std::uint64_t h_;
  BigInt a_;
  std::vector<BigInt> nodes_;
  IntPolynomial f_;
  std::uint64_t M_;
};

// max_k ord_p prod_{j != k}(n_j - n_k); 0 for a single node.
std::int64_t compute_L(const BigInt& p, std::span<const BigInt> nodes);

// min{Kh, (K-1)h - L + M}, possibly negative.
std::int64_t interpolation_bound(std::int64_t K, std::int64_t h, std::int64_t L, std::int64_t M);

struct Lemma21Verdict {
  padic::Valuation ord_fa{0};
  std::int64_t L = 0;
  std::int64_t bound = 0;
  bool holds = false;
};

Lemma21Verdict verify_instance(const InterpolationInstance& instance);

/// Seeded generator: nodes a + p^h t_k with distinct t_k drawn from [0, 8K],
/// and f = g * prod_k (z - n_k) + p^M r with small random g, r.
InterpolationInstance random_instance(const BigInt& p, std::uint64_t h, std::uint64_t K,
                                      std::uint64_t M, std::uint64_t seed);

enum class NodeMode {
  kPrimitiveRoot,  // g^{q m} with g the least primitive root, p odd
  kPowersOfFive,   // 5^{m q / 2}, p = 2
};

/// Nodes n_k = g^{q m_k} (or 5^{m_k q/2}) reduced mod p^{(h+1)M}, q = phi(p^h).
/// Throws DomainError when the nodes collide or fail n_k = 1 (mod p^h), and
/// when the mode does not fit p.
std::vector<BigInt> structured_nodes(const BigInt& p, std::uint64_t h, std::uint64_t M,
                                     std::span<const std::uint64_t> set, NodeMode mode);
// Mode chosen from p.
std::vector<BigInt> structured_nodes(const diagonal::PowerSumSpec& spec);

struct NodeBoundCheck {
  std::int64_t L = 0;
  std::int64_t bound = 0;
  bool holds = false;
};

// L of the structured nodes against (K-1)h + ord((M-1)!) for odd p and
// (K-1)h + M - 1 for p = 2.
NodeBoundCheck node_valuation_bound(const diagonal::PowerSumSpec& spec);
bool node_valuation_bound_check(const diagonal::PowerSumSpec& spec);

}  // namespace artin::interp
