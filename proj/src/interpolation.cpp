#include "artin/interpolation.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "artin/errors.hpp"

namespace artin::interp {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::from_roots(std::span<const BigInt> roots) {
  IntPolynomial out(std::vector<BigInt>{1});
  for (const auto& r : roots) out = out * IntPolynomial(std::vector<BigInt>{-r, 1});
  return out;
}

BigInt IntPolynomial::evaluate(const BigInt& z) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

BigInt IntPolynomial::evaluate_mod(const BigInt& z, const BigInt& modulus) const {
  const BigInt zr = mod_floor(z, modulus);
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = mod_floor(acc * zr + *it, modulus);
  }
  return acc;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const BigInt& c, const IntPolynomial& a) {
  std::vector<BigInt> out = a.coeffs_;
  for (auto& x : out) x *= c;
  return IntPolynomial(std::move(out));
}

InterpolationInstance::InterpolationInstance(BigInt p, std::uint64_t h, BigInt a,
                                             std::vector<BigInt> nodes, IntPolynomial f,
                                             std::uint64_t M, std::size_t degree_cap)
    : p_(std::move(p)), h_(h), a_(std::move(a)), nodes_(std::move(nodes)), f_(std::move(f)), M_(M) {
  if (!padic::is_prime(p_)) throw DomainError("InterpolationInstance: " + p_.str() + " is not prime");
  if (h_ < 1) throw DomainError("InterpolationInstance: h must be >= 1");
  if (M_ < 1) throw DomainError("InterpolationInstance: M must be >= 1");
  if (nodes_.empty()) throw DomainError("InterpolationInstance: need at least one node");
  if (f_.degree() > static_cast<std::int64_t>(degree_cap)) {
    throw DomainError("InterpolationInstance: degree " + std::to_string(f_.degree()) +
                      " exceeds the cap " + std::to_string(degree_cap));
  }
  auto sorted = nodes_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DomainError("InterpolationInstance: nodes must be distinct");
  }
  const BigInt ph = ipow(p_, h_);
  const BigInt pM = ipow(p_, M_);
  for (const auto& n : nodes_) {
    if (mod_floor(n - a_, ph) != 0) {
      throw DomainError("InterpolationInstance: node " + n.str() + " is not congruent to a mod p^h");
    }
    if (f_.evaluate_mod(n, pM) != 0) {
      throw DomainError("InterpolationInstance: f(" + n.str() + ") is not divisible by p^M");
    }
  }
}

std::int64_t compute_L(const BigInt& p, std::span<const BigInt> nodes) {
  if (nodes.empty()) throw DomainError("compute_L: need at least one node");
  std::int64_t best = 0;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    std::int64_t total = 0;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (j == k) continue;
      const auto v = padic::ord(nodes[j] - nodes[k], p);
      if (v.is_infinite()) throw DomainError("compute_L: nodes must be distinct");
      total += v.value();
    }
    best = std::max(best, total);
  }
  return best;
}

std::int64_t interpolation_bound(std::int64_t K, std::int64_t h, std::int64_t L, std::int64_t M) {
  return std::min(K * h, (K - 1) * h - L + M);
}

Lemma21Verdict verify_instance(const InterpolationInstance& instance) {
  Lemma21Verdict verdict;
  const auto K = static_cast<std::int64_t>(instance.K());
  const auto h = static_cast<std::int64_t>(instance.h());
  const auto M = static_cast<std::int64_t>(instance.M());
  verdict.L = compute_L(instance.p(), instance.nodes());
  verdict.bound = interpolation_bound(K, h, verdict.L, M);
  verdict.ord_fa = padic::ord(instance.f().evaluate(instance.a()), instance.p());
  verdict.holds = verdict.ord_fa >= padic::Valuation(verdict.bound);
  return verdict;
}

namespace {

std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

IntPolynomial random_polynomial(std::mt19937_64& rng, std::int64_t max_degree, std::int64_t bound) {
  std::vector<BigInt> coeffs(static_cast<std::size_t>(draw(rng, 0, max_degree)) + 1);
  for (auto& c : coeffs) c = draw(rng, -bound, bound);
  return IntPolynomial(std::move(coeffs));
}

}  // namespace

InterpolationInstance random_instance(const BigInt& p, std::uint64_t h, std::uint64_t K,
                                      std::uint64_t M, std::uint64_t seed) {
  if (K < 1) throw DomainError("random_instance: K must be >= 1");
  std::mt19937_64 rng(seed);
  const BigInt a = draw(rng, -20, 20);
  const BigInt ph = ipow(p, h);

  // Partial Fisher-Yates over [0, 8K] for distinct offsets.
  std::vector<std::int64_t> pool(8 * K + 1);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<BigInt> nodes;
  for (std::uint64_t k = 0; k < K; ++k) {
    const auto pick = static_cast<std::size_t>(draw(rng, static_cast<std::int64_t>(k),
                                                    static_cast<std::int64_t>(pool.size()) - 1));
    std::swap(pool[k], pool[pick]);
    nodes.push_back(a + ph * pool[k]);
  }

  const IntPolynomial g = random_polynomial(rng, 2, 5);
  const IntPolynomial r = random_polynomial(rng, 3, 5);
  IntPolynomial f = g * IntPolynomial::from_roots(nodes) + ipow(p, M) * r;
  return InterpolationInstance(p, h, a, std::move(nodes), std::move(f), M);
}

std::vector<BigInt> structured_nodes(const BigInt& p, std::uint64_t h, std::uint64_t M,
                                     std::span<const std::uint64_t> set, NodeMode mode) {
  if (set.empty()) throw DomainError("structured_nodes: empty degree set");
  if (M < 1) throw DomainError("structured_nodes: M must be >= 1");
  const BigInt q = padic::euler_phi_prime_power(p, h);
  const BigInt modulus = ipow(p, (h + 1) * M);
  const BigInt ph = ipow(p, h);

  BigInt base;
  BigInt unit_exponent;  // exponent per unit of m
  if (mode == NodeMode::kPrimitiveRoot) {
    if (p == 2) throw DomainError("structured_nodes: p = 2 needs the powers-of-five mode");
    base = padic::primitive_root(p);
    unit_exponent = q;
  } else {
    if (p != 2) throw DomainError("structured_nodes: powers-of-five mode is for p = 2");
    if (h < 2) throw DomainError("structured_nodes: powers-of-five mode needs h >= 2");
    base = 5;
    unit_exponent = q / 2;
  }

  std::vector<BigInt> nodes;
  for (const auto m : set) {
    BigInt n = padic::pow_mod(base, unit_exponent * m, modulus);
    if (mod_floor(n - 1, ph) != 0) throw DomainError("structured_nodes: node not 1 mod p^h");
    nodes.push_back(std::move(n));
  }
  auto sorted = nodes;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DomainError("structured_nodes: nodes collide mod p^{(h+1)M}");
  }
  return nodes;
}

std::vector<BigInt> structured_nodes(const diagonal::PowerSumSpec& spec) {
  const auto mode = spec.p() == 2 ? NodeMode::kPowersOfFive : NodeMode::kPrimitiveRoot;
  return structured_nodes(spec.p(), spec.h(), spec.M(), spec.set(), mode);
}

NodeBoundCheck node_valuation_bound(const diagonal::PowerSumSpec& spec) {
  NodeBoundCheck check;
  const auto nodes = structured_nodes(spec);
  check.L = compute_L(spec.p(), nodes);
  const auto base = static_cast<std::int64_t>((spec.K() - 1) * spec.h());
  const auto slack = spec.p() == 2
                         ? static_cast<std::int64_t>(spec.M() - 1)
                         : static_cast<std::int64_t>(padic::factorial_valuation(spec.M() - 1, spec.p()));
  check.bound = base + slack;
  check.holds = check.L <= check.bound;
  return check;
}

bool node_valuation_bound_check(const diagonal::PowerSumSpec& spec) {
  return node_valuation_bound(spec).holds;
}

}  // namespace artin::interp
