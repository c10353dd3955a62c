#include <algorithm>
#include <array>
#include <random>

#include "doctest.h"

#include "artin/errors.hpp"
#include "artin/interpolation.hpp"
#include "oracles.hpp"

using namespace artin;
using namespace artin::interp;
using padic::Valuation;

namespace {

std::vector<BigInt> big(std::initializer_list<long long> xs) {
  std::vector<BigInt> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

IntPolynomial poly(std::initializer_list<long long> xs) { return IntPolynomial(big(xs)); }

// Direct evaluation of L from its definition with oracle valuations.
std::int64_t L_by_definition(const BigInt& p, const std::vector<BigInt>& nodes) {
  std::int64_t best = 0;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    BigInt prod = 1;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (j != k) prod *= nodes[j] - nodes[k];
    }
    best = std::max(best, oracle::ord_by_division(prod, p));
  }
  return best;
}

}  // namespace

TEST_SUITE("interpolation") {

TEST_CASE("polynomial arithmetic") {
  const auto f = IntPolynomial::from_roots(big({1, 4}));
  CHECK(f == poly({4, -5, 1}));
  CHECK(f.degree() == 2);
  CHECK(IntPolynomial().degree() == -1);
  CHECK(poly({1, 2, 0, 0}).coefficients().size() == 2);
  CHECK(f.evaluate(1) == 0);
  CHECK(f.evaluate(0) == 4);
  CHECK((f + poly({9})).evaluate(4) == 9);
  CHECK((poly({1, 1}) * poly({-1, 1})) == poly({-1, 0, 1}));
  CHECK((BigInt(3) * poly({1, 2})) == poly({3, 6}));
  CHECK(f.evaluate_mod(-7, 5) == mod_floor(f.evaluate(-7), 5));
}

TEST_CASE("compute_L examples") {
  CHECK(compute_L(3, big({1, 4})) == 1);
  CHECK(compute_L(3, big({1})) == 0);
  CHECK(compute_L(2, big({1, 3, 5})) == 3);
  CHECK_THROWS_AS(compute_L(3, big({1, 1})), DomainError);
  CHECK_THROWS_AS(compute_L(3, {}), DomainError);
}

TEST_CASE("interpolation_bound examples") {
  CHECK(interpolation_bound(2, 1, 1, 2) == 2);
  CHECK(interpolation_bound(1, 5, 0, 3) == 3);
  CHECK(interpolation_bound(3, 1, 10, 1) == -7);
}

TEST_CASE("verify_instance examples") {
  const InterpolationInstance a(3, 1, 1, big({1, 4}), IntPolynomial::from_roots(big({1, 4})) + poly({9}), 2);
  const auto va = verify_instance(a);
  CHECK(va.ord_fa == Valuation(2));
  CHECK(va.L == 1);
  CHECK(va.bound == 2);
  CHECK(va.holds);

  const InterpolationInstance b(3, 1, 1, big({1}), poly({-1, 1}), 4);
  const auto vb = verify_instance(b);
  CHECK(vb.ord_fa.is_infinite());
  CHECK(vb.bound == 1);
  CHECK(vb.holds);

  const InterpolationInstance c(2, 3, 1, big({1, 9}), IntPolynomial::from_roots(big({1, 9})) + poly({2}), 1);
  const auto vc = verify_instance(c);
  CHECK(vc.ord_fa == Valuation(1));
  CHECK(vc.L == 3);
  CHECK(vc.bound == 1);
  CHECK(vc.holds);
}

TEST_CASE("instance validation") {
  const auto f = IntPolynomial::from_roots(big({1, 4}));
  CHECK_THROWS_AS(InterpolationInstance(3, 1, 1, big({1, 1}), f, 1), DomainError);      // repeated node
  CHECK_THROWS_AS(InterpolationInstance(3, 1, 1, big({1, 5}), f, 1), DomainError);      // 5 != 1 mod 3
  CHECK_THROWS_AS(InterpolationInstance(3, 1, 1, big({1, 4}), f + poly({1}), 1), DomainError);
  CHECK_THROWS_AS(InterpolationInstance(3, 1, 1, big({1, 4}), f, 1, 1), DomainError);   // degree cap
  CHECK_THROWS_AS(InterpolationInstance(3, 1, 1, {}, f, 1), DomainError);
  CHECK_THROWS_AS(InterpolationInstance(4, 1, 1, big({1}), f, 1), DomainError);
}

TEST_CASE("random_instance is deterministic and valid") {
  const auto a = random_instance(3, 1, 2, 2, 0);
  const auto b = random_instance(3, 1, 2, 2, 0);
  CHECK(a.nodes() == b.nodes());
  CHECK(a.f() == b.f());
  CHECK(a.a() == b.a());
  CHECK(verify_instance(a).holds);
}

TEST_CASE("random instances satisfy the interpolation bound") {
  const std::array<std::uint64_t, 3> primes{2, 3, 5};
  std::uint64_t checked = 0;
  for (std::uint64_t i = 0; i < 500; ++i) {
    const BigInt p = primes[i % 3];
    const std::uint64_t h = 1 + (i / 3) % 3;
    const std::uint64_t K = 1 + (i / 9) % 3;
    const std::uint64_t M = 1 + (i / 27) % 4;
    const auto inst = random_instance(p, h, K, M, 1000 + i);
    REQUIRE(inst.K() == K);
    for (const auto& n : inst.nodes()) {
      CHECK(mod_floor(n - inst.a(), ipow(p, h)) == 0);
      CHECK(mod_floor(inst.f().evaluate(n), ipow(p, M)) == 0);
    }
    const auto v = verify_instance(inst);
    CHECK(v.L == L_by_definition(p, inst.nodes()));
    const BigInt fa = inst.f().evaluate(inst.a());
    if (fa == 0) {
      CHECK(v.ord_fa.is_infinite());
    } else {
      CHECK(v.ord_fa == Valuation(oracle::ord_by_division(fa, p)));
    }
    CHECK(v.bound == std::min<std::int64_t>(K * h, (K - 1) * h - v.L + M));
    CHECK(v.holds);
    ++checked;
  }
  CHECK(checked == 500);
}

TEST_CASE("compute_L is invariant under node permutation") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = random_instance(3, 1 + trial % 2, 3, 2, trial);
    auto nodes = inst.nodes();
    const auto L = compute_L(3, nodes);
    std::shuffle(nodes.begin(), nodes.end(), rng);
    CHECK(compute_L(3, nodes) == L);
    std::sort(nodes.begin(), nodes.end());
    CHECK(compute_L(3, nodes) == L);
  }
}

TEST_CASE("exact evaluation agrees with evaluation mod p^T above the bound") {
  for (std::uint64_t i = 0; i < 200; ++i) {
    const BigInt p = std::array<int, 3>{2, 3, 5}[i % 3];
    const auto inst = random_instance(p, 1 + i % 3, 1 + i % 2, 1 + i % 4, 77 + i);
    const auto v = verify_instance(inst);
    const std::uint64_t T = static_cast<std::uint64_t>(std::max<std::int64_t>(v.bound, 0)) + 1;
    const BigInt mod = ipow(p, T);
    const BigInt residue = inst.f().evaluate_mod(inst.a(), mod);
    const bool divisible_exact = v.ord_fa >= Valuation(static_cast<std::int64_t>(T));
    CHECK(divisible_exact == (residue == 0));
    if (residue != 0) CHECK(Valuation(oracle::ord_by_division(residue, p)) == v.ord_fa);
    CHECK(v.ord_fa >= Valuation(v.bound));
  }
}

TEST_CASE("structured_nodes examples") {
  CHECK(structured_nodes(3, 1, 1, std::vector<std::uint64_t>{1}, NodeMode::kPrimitiveRoot) == big({4}));
  CHECK(structured_nodes(3, 1, 2, std::vector<std::uint64_t>{1, 2}, NodeMode::kPrimitiveRoot) ==
        big({4, 16}));
  CHECK(structured_nodes(2, 3, 1, std::vector<std::uint64_t>{1}, NodeMode::kPowersOfFive) == big({9}));
  CHECK_THROWS_AS(structured_nodes(2, 3, 1, std::vector<std::uint64_t>{1}, NodeMode::kPrimitiveRoot),
                  DomainError);
  CHECK_THROWS_AS(structured_nodes(3, 1, 1, std::vector<std::uint64_t>{1}, NodeMode::kPowersOfFive),
                  DomainError);
  CHECK(structured_nodes(diagonal::PowerSumSpec(2, 3, 1, {1})) == big({9}));
}

TEST_CASE("structured node differences have valuation h + ord(m_j - m_k)") {
  for (std::uint64_t p : {2, 3, 5}) {
    for (std::uint64_t h = (p == 2 ? 3 : 1); h <= 4; ++h) {
      for (std::uint64_t M = 1; M <= 4; ++M) {
        const diagonal::PowerSumSpec spec(p, h, M, diagonal::default_degree_set(M, M));
        const auto nodes = structured_nodes(spec);
        const auto& set = spec.set();
        for (std::size_t j = 0; j < nodes.size(); ++j) {
          CHECK(mod_floor(nodes[j] - 1, ipow(BigInt(p), h)) == 0);
          for (std::size_t k = 0; k < j; ++k) {
            const auto expected =
                static_cast<std::int64_t>(h) +
                oracle::ord_by_division(BigInt(set[j]) - BigInt(set[k]), p);
            CHECK(oracle::ord_by_division(nodes[j] - nodes[k], p) == expected);
          }
        }
      }
    }
  }
}

TEST_CASE("node valuation bound") {
  const diagonal::PowerSumSpec a(3, 1, 2, {2, 3});
  const auto check = node_valuation_bound(a);
  CHECK(check.L == 1);
  CHECK(check.bound == 1);
  CHECK(check.holds);
  CHECK(node_valuation_bound_check(a));
  CHECK(node_valuation_bound_check(diagonal::PowerSumSpec(5, 2, 3, {4})));
  CHECK(node_valuation_bound_check(diagonal::PowerSumSpec(2, 3, 1, {1})));
  const auto two = node_valuation_bound(diagonal::PowerSumSpec(2, 3, 3, {3, 4, 5}));
  CHECK(two.L == 2 * 3 + 1);
  CHECK(two.bound == 2 * 3 + 2);
  CHECK(two.holds);
}

}  // TEST_SUITE
