#pragma once

// Certified failures of Artin's Conjecture for block-diagonal systems.
//
// A report is certified when, for the system with W blocks of s variables,
//   W s > sum_m (phi(p^h) m)^2      (the conjecture predicts a nonzero zero)
//   s < p^{rh}                      (no nonzero zero exists)
// both hold in exact integer arithmetic.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "artin/bigint.hpp"
#include "artin/diagonal.hpp"

namespace artin::cex {

enum class Mode {
  kExact,  // least h for which s = p^{rh} - 1 already certifies
  kPaper,  // least h >= 5 with p^{rh} > 4(h+1) M^3 p^{h+2}
};

const char* to_string(Mode mode);
// "exact" or "paper"; throws DomainError otherwise.
Mode parse_mode(std::string_view text);

struct CounterexampleReport {
  BigInt p;
  std::uint64_t r = 0;
  std::uint64_t M = 0;
  std::vector<std::uint64_t> set;
  std::uint64_t h = 0;
  BigInt W;
  BigInt s_chosen;
  BigInt s_min;  // least s with W s > sum d^2
  BigInt s_max;  // p^{rh} - 1
  std::vector<BigInt> degrees;
  BigInt sum_degree_squares;
  BigInt total_variables;
  Mode mode = Mode::kExact;
  bool certified = false;
  // Why certification failed; empty when certified.
  std::string diagnostic;
  // The system with s = s_chosen.
  std::optional<diagonal::DiagonalSystem> system;
};

// W (p^{rh} - 1) > sum_m (phi(p^h) m)^2
bool exact_condition_holds(const BigInt& p, std::uint64_t r, std::span<const std::uint64_t> set,
                           std::uint64_t h);
// p^{rh} > 4(h+1) M^3 p^{h+2}
bool paper_condition_holds(const BigInt& p, std::uint64_t r, std::uint64_t M, std::uint64_t h);

/// Least admissible h for the mode. Throws DomainError unless
/// r = |set| >= 2 and set is r distinct integers in [M, 2M).
std::uint64_t find_min_h(const BigInt& p, std::uint64_t r, std::uint64_t M,
                         std::span<const std::uint64_t> set, Mode mode);

struct BuildOptions {
  std::optional<std::uint64_t> h_override;
  // Defaults to s_max.
  std::optional<BigInt> s_override;
};

/// Report for the given parameters. An empty certified range, or an s
/// override outside it, yields certified = false with a diagnostic.
CounterexampleReport build_counterexample(const BigInt& p, std::uint64_t r, std::uint64_t M,
                                          std::span<const std::uint64_t> set, Mode mode,
                                          const BuildOptions& options = {});

/// Recomputes W, the degrees, and sum d^2 from (p, h, set) and checks both
/// inequalities at s_chosen. Report fields that disagree with the
/// recomputation fail certification.
bool certify(const CounterexampleReport& report);

}  // namespace artin::cex
