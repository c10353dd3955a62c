#pragma once

// Exhaustive search for the least number N of p-coprime integers x_1..x_N with
//
//   S_{h,m}(x) = 0 (mod p^{(h+1)M})   for every m in the degree set,
//
// and the checks N >= p^{Kh}, p^{Kh} | N against its outcome.
//
// Residues mod Q = p^{(h+1)M} are machine words here; the state budget bounds
// Q^K, so every residue and state index fits comfortably in 64 bits.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "artin/bigint.hpp"
#include "artin/diagonal.hpp"

namespace artin::search {

inline constexpr std::uint64_t kDefaultStateBudget = 10'000'000;

struct SearchOptions {
  std::uint64_t state_budget = kDefaultStateBudget;
  // Worker threads for frontier expansion; results do not depend on this.
  unsigned threads = 1;
};

/// Units u mod Q sharing the vector (u^{phi(p^h) m} mod Q)_{m in set}.
/// `representative` is the least such u.
struct UnitPowerClass {
  std::uint64_t representative = 0;
  std::vector<std::uint64_t> value_vector;
  std::uint64_t multiplicity = 0;

  friend bool operator==(const UnitPowerClass&, const UnitPowerClass&) = default;
};

struct WitnessEntry {
  UnitPowerClass unit_class;
  std::uint64_t count = 0;

  friend bool operator==(const WitnessEntry&, const WitnessEntry&) = default;
};

struct SearchResult {
  // Empty when no N <= search_bound exists.
  std::optional<std::uint64_t> minimal_n;
  // Classes with counts, ascending by representative; counts sum to minimal_n.
  std::vector<WitnessEntry> witness;
  std::uint64_t search_bound = 0;

  bool found() const { return minimal_n.has_value(); }
  // Each witness representative repeated `count` times.
  std::vector<BigInt> witness_values() const;

  friend bool operator==(const SearchResult&, const SearchResult&) = default;
};

// Q = p^{(h+1)M}. Throws DomainError when phi(p^h) < h+1 and ResourceError
// when Q^K exceeds the state budget.
std::uint64_t search_modulus(const diagonal::PowerSumSpec& spec, const SearchOptions& options = {});

// 4 p^{Kh}.
std::uint64_t default_n_max(const diagonal::PowerSumSpec& spec);

/// All unit classes mod Q, sorted by representative.
std::vector<UnitPowerClass> unit_power_classes(const diagonal::PowerSumSpec& spec,
                                               const SearchOptions& options = {});

/// Least N <= n_max admitting a solution, by breadth-first search in
/// (Z/Q)^K from 0 back to 0 with steps drawn from the class value vectors.
/// The witness is the lexicographically least multiset (by class
/// representative) among those of size N.
SearchResult minimal_solution_size(const diagonal::PowerSumSpec& spec, std::uint64_t n_max,
                                   const SearchOptions& options = {});

// All K congruences hold mod p^{(h+1)M} and some x_i is coprime to p.
bool check_congruence_witness(const diagonal::PowerSumSpec& spec, std::span<const BigInt> x);

enum class Lemma22Status { kConsistent, kViolated, kVacuous };

struct Lemma22Verdict {
  Lemma22Status status = Lemma22Status::kVacuous;
  BigInt lower_bound;  // p^{Kh}
  bool bound_holds = false;
  bool divisibility_holds = false;
};

Lemma22Verdict verify_lemma22(const diagonal::PowerSumSpec& spec, const SearchResult& result);

const char* to_string(Lemma22Status status);

}  // namespace artin::search
