#include "artin/congruence_search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "artin/errors.hpp"
#include "artin/padic.hpp"

namespace artin::search {

namespace {

using u64 = std::uint64_t;
constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
// Frontiers smaller than this are expanded on the calling thread.
constexpr std::size_t kParallelFrontier = 4096;

u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 pow_mod_u64(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

// (Z/Q)^K with mixed-radix state index sum_j c_j Q^j.
struct StateSpace {
  u64 Q = 0;
  std::size_t K = 0;
  u64 states = 0;

  u64 encode(std::span<const u64> comps) const {
    u64 index = 0;
    for (std::size_t j = K; j-- > 0;) index = index * Q + comps[j];
    return index;
  }
  void decode(u64 index, std::span<u64> comps) const {
    for (std::size_t j = 0; j < K; ++j) {
      comps[j] = index % Q;
      index /= Q;
    }
  }
};

StateSpace make_space(const diagonal::PowerSumSpec& spec, const SearchOptions& options) {
  StateSpace space;
  space.Q = search_modulus(spec, options);
  space.K = spec.K();
  space.states = to_u64(ipow(BigInt(space.Q), space.K), "state count");
  return space;
}

// Class value vectors, one row of K residues per class.
struct StepTable {
  std::size_t K = 0;
  std::vector<u64> values;

  std::size_t size() const { return K == 0 ? 0 : values.size() / K; }
  std::span<const u64> row(std::size_t c) const { return {values.data() + c * K, K}; }
};

StepTable step_table(const std::vector<UnitPowerClass>& classes, std::size_t K) {
  StepTable table;
  table.K = K;
  table.values.reserve(classes.size() * K);
  for (const auto& cls : classes) {
    table.values.insert(table.values.end(), cls.value_vector.begin(), cls.value_vector.end());
  }
  return table;
}

// Orbits of the state space under componentwise multiplication by the step
// group. The step set is itself that group, so BFS distance is constant on
// orbits and only one representative per orbit needs expanding.
struct OrbitTable {
  std::vector<std::uint32_t> orbit_of;
  std::vector<u64> representative;
};

OrbitTable build_orbits(const StateSpace& space, const StepTable& steps) {
  OrbitTable table;
  table.orbit_of.assign(space.states, kUnset);
  std::vector<u64> comps(space.K);
  std::vector<u64> image(space.K);
  for (u64 v = 0; v < space.states; ++v) {
    if (table.orbit_of[v] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(table.representative.size());
    table.representative.push_back(v);
    space.decode(v, comps);
    for (std::size_t c = 0; c < steps.size(); ++c) {
      const auto g = steps.row(c);
      for (std::size_t j = 0; j < space.K; ++j) image[j] = mul_mod(g[j], comps[j], space.Q);
      table.orbit_of[space.encode(image)] = id;
    }
  }
  return table;
}

struct LayerOutcome {
  bool closed = false;  // some expansion reached state 0
  std::vector<std::uint32_t> next;
};

// Expand frontier[begin, end) at distance `layer`; `dist` is per orbit.
template <bool Atomic>
void expand_range(const StateSpace& space, const StepTable& steps, const OrbitTable& orbits,
                  std::vector<std::uint32_t>& dist, std::span<const std::uint32_t> frontier,
                  std::uint32_t layer, std::atomic<bool>& closed,
                  std::vector<std::uint32_t>& next) {
  std::vector<u64> comps(space.K);
  std::vector<u64> moved(space.K);
  for (const auto orbit : frontier) {
    space.decode(orbits.representative[orbit], comps);
    for (std::size_t c = 0; c < steps.size(); ++c) {
      const auto g = steps.row(c);
      for (std::size_t j = 0; j < space.K; ++j) {
        const u64 sum = comps[j] + g[j];
        moved[j] = sum >= space.Q ? sum - space.Q : sum;
      }
      const u64 w = space.encode(moved);
      if (w == 0) {
        closed.store(true, std::memory_order_relaxed);
        return;
      }
      const auto target = orbits.orbit_of[w];
      if constexpr (Atomic) {
        std::atomic_ref<std::uint32_t> slot(dist[target]);
        std::uint32_t expected = kUnset;
        if (slot.load(std::memory_order_relaxed) == kUnset &&
            slot.compare_exchange_strong(expected, layer + 1, std::memory_order_relaxed)) {
          next.push_back(target);
        }
      } else {
        if (dist[target] == kUnset) {
          dist[target] = layer + 1;
          next.push_back(target);
        }
      }
    }
    if constexpr (Atomic) {
      if (closed.load(std::memory_order_relaxed)) return;
    }
  }
}

LayerOutcome expand_layer(const StateSpace& space, const StepTable& steps,
                          const OrbitTable& orbits, std::vector<std::uint32_t>& dist,
                          const std::vector<std::uint32_t>& frontier, std::uint32_t layer,
                          unsigned threads) {
  LayerOutcome out;
  std::atomic<bool> closed{false};
  if (threads <= 1 || frontier.size() < kParallelFrontier) {
    expand_range<false>(space, steps, orbits, dist, frontier, layer, closed, out.next);
    out.closed = closed.load();
    return out;
  }

  std::vector<std::vector<std::uint32_t>> partial(threads);
  std::vector<std::thread> workers;
  workers.reserve(threads);
  const std::size_t chunk = (frontier.size() + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t begin = std::min(frontier.size(), t * chunk);
    const std::size_t end = std::min(frontier.size(), begin + chunk);
    workers.emplace_back([&, t, begin, end] {
      expand_range<true>(space, steps, orbits, dist,
                         std::span<const std::uint32_t>(frontier).subspan(begin, end - begin),
                         layer, closed, partial[t]);
    });
  }
  for (auto& w : workers) w.join();
  out.closed = closed.load();
  for (auto& part : partial) out.next.insert(out.next.end(), part.begin(), part.end());
  return out;
}

}  // namespace

std::vector<BigInt> SearchResult::witness_values() const {
  std::vector<BigInt> out;
  for (const auto& entry : witness) {
    for (std::uint64_t i = 0; i < entry.count; ++i) out.emplace_back(entry.unit_class.representative);
  }
  return out;
}

std::uint64_t search_modulus(const diagonal::PowerSumSpec& spec, const SearchOptions& options) {
  const auto h = spec.h();
  if (spec.phi() < h + 1) {
    throw DomainError("congruence search needs phi(p^h) >= h+1 so that multiples of p drop out; "
                      "phi(" + spec.p().str() + "^" + std::to_string(h) + ") = " +
                      spec.phi().str());
  }
  const BigInt Q = ipow(spec.p(), (h + 1) * spec.M());
  const BigInt states = ipow(Q, spec.K());
  if (states > options.state_budget || states >= kUnset) {
    throw ResourceError("state budget exceeded: p^{(h+1)MK} = " + states.str() +
                        " states, budget is " + std::to_string(options.state_budget));
  }
  return Q.convert_to<std::uint64_t>();
}

std::uint64_t default_n_max(const diagonal::PowerSumSpec& spec) {
  return to_u64(4 * ipow(spec.p(), spec.K() * spec.h()), "default n_max");
}

std::vector<UnitPowerClass> unit_power_classes(const diagonal::PowerSumSpec& spec,
                                               const SearchOptions& options) {
  const StateSpace space = make_space(spec, options);
  const u64 p = spec.p().convert_to<u64>();
  std::vector<u64> exps;
  for (const auto m : spec.set()) exps.push_back(to_u64(spec.phi() * m, "power-sum degree"));

  std::vector<UnitPowerClass> classes;
  std::unordered_map<u64, std::size_t> index_of;
  std::vector<u64> vec(space.K);
  for (u64 u = 1; u < space.Q; ++u) {
    if (u % p == 0) continue;
    for (std::size_t j = 0; j < space.K; ++j) vec[j] = pow_mod_u64(u, exps[j], space.Q);
    const auto [it, inserted] = index_of.try_emplace(space.encode(vec), classes.size());
    if (inserted) classes.push_back(UnitPowerClass{u, vec, 0});
    ++classes[it->second].multiplicity;
  }
  return classes;
}

SearchResult minimal_solution_size(const diagonal::PowerSumSpec& spec, std::uint64_t n_max,
                                   const SearchOptions& options) {
  if (n_max < 1) throw DomainError("minimal_solution_size: n_max must be >= 1");
  if (n_max >= kUnset) throw DomainError("minimal_solution_size: n_max too large");
  const StateSpace space = make_space(spec, options);
  const auto classes = unit_power_classes(spec, options);
  const StepTable steps = step_table(classes, space.K);
  const OrbitTable orbits = build_orbits(space, steps);

  std::vector<std::uint32_t> dist(orbits.representative.size(), kUnset);
  dist[orbits.orbit_of[0]] = 0;
  std::vector<std::uint32_t> frontier{orbits.orbit_of[0]};

  SearchResult result;
  result.search_bound = n_max;
  std::uint64_t found = 0;
  for (std::uint32_t layer = 0; layer < n_max && !frontier.empty(); ++layer) {
    auto outcome = expand_layer(space, steps, orbits, dist, frontier, layer, options.threads);
    if (outcome.closed) {
      found = layer + 1;
      break;
    }
    frontier = std::move(outcome.next);
  }
  if (found == 0) return result;
  result.minimal_n = found;

  // Greedy reconstruction: the least class whose removal leaves a remainder
  // reachable in exactly the remaining count. All distances <= found-1 are final.
  auto dist_of = [&](std::span<const u64> comps) { return dist[orbits.orbit_of[space.encode(comps)]]; };
  std::vector<u64> target(space.K, 0);
  std::vector<u64> candidate(space.K);
  std::vector<std::uint64_t> counts(classes.size(), 0);
  for (std::uint64_t remaining = found; remaining > 0; --remaining) {
    bool picked = false;
    for (std::size_t c = 0; c < steps.size() && !picked; ++c) {
      const auto g = steps.row(c);
      for (std::size_t j = 0; j < space.K; ++j) {
        candidate[j] = target[j] >= g[j] ? target[j] - g[j] : target[j] + space.Q - g[j];
      }
      if (dist_of(candidate) == remaining - 1) {
        ++counts[c];
        target = candidate;
        picked = true;
      }
    }
    if (!picked) throw std::logic_error("minimal_solution_size: witness reconstruction failed");
  }
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (counts[c] != 0) result.witness.push_back(WitnessEntry{classes[c], counts[c]});
  }
  return result;
}

bool check_congruence_witness(const diagonal::PowerSumSpec& spec, std::span<const BigInt> x) {
  if (x.empty()) return false;
  const bool has_unit =
      std::any_of(x.begin(), x.end(), [&](const BigInt& xi) { return xi % spec.p() != 0; });
  if (!has_unit) return false;
  const padic::PrimePowerModulus modulus(spec.p(), (spec.h() + 1) * spec.M());
  return std::all_of(spec.set().begin(), spec.set().end(), [&](std::uint64_t m) {
    return diagonal::power_sum(spec, m, x, modulus) == 0;
  });
}

Lemma22Verdict verify_lemma22(const diagonal::PowerSumSpec& spec, const SearchResult& result) {
  Lemma22Verdict verdict;
  verdict.lower_bound = ipow(spec.p(), spec.K() * spec.h());
  if (!result.found()) return verdict;
  const BigInt n = *result.minimal_n;
  verdict.bound_holds = n >= verdict.lower_bound;
  verdict.divisibility_holds = n % verdict.lower_bound == 0;
  verdict.status = verdict.bound_holds && verdict.divisibility_holds ? Lemma22Status::kConsistent
                                                                     : Lemma22Status::kViolated;
  return verdict;
}

const char* to_string(Lemma22Status status) {
  switch (status) {
    case Lemma22Status::kConsistent: return "consistent";
    case Lemma22Status::kViolated: return "violated";
    case Lemma22Status::kVacuous: return "vacuous";
  }
  return "unknown";
}

}  // namespace artin::search
