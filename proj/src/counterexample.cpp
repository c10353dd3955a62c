#include "artin/counterexample.hpp"

#include <algorithm>

#include "artin/errors.hpp"
#include "artin/padic.hpp"

namespace artin::cex {

namespace {

std::uint64_t least_h(const BigInt& p) { return p == 2 ? 3 : 1; }

void validate_parameters(const BigInt& p, std::uint64_t r, std::uint64_t M,
                         std::span<const std::uint64_t> set) {
  if (!padic::is_prime(p)) throw DomainError(p.str() + " is not prime");
  if (r < 2) throw DomainError("r >= 2 required (got r = " + std::to_string(r) + ")");
  if (M < 1) throw DomainError("M must be >= 1");
  if (r > M) {
    throw DomainError("r = " + std::to_string(r) + " exceeds M = " + std::to_string(M) +
                      ": [M, 2M) holds only M integers");
  }
  if (set.size() != r) {
    throw DomainError("degree set has " + std::to_string(set.size()) + " entries, expected r = " +
                      std::to_string(r));
  }
  // Interval and distinctness checks live in PowerSumSpec.
  (void)diagonal::PowerSumSpec(p, least_h(p), M, {set.begin(), set.end()});
}

std::vector<BigInt> degrees_for(const BigInt& p, std::uint64_t h, std::span<const std::uint64_t> set) {
  const BigInt phi = padic::euler_phi_prime_power(p, h);
  std::vector<BigInt> out;
  for (const auto m : set) out.emplace_back(phi * m);
  return out;
}

}  // namespace

const char* to_string(Mode mode) { return mode == Mode::kExact ? "exact" : "paper"; }

Mode parse_mode(std::string_view text) {
  if (text == "exact") return Mode::kExact;
  if (text == "paper") return Mode::kPaper;
  throw DomainError("mode must be 'exact' or 'paper', got '" + std::string(text) + "'");
}

bool exact_condition_holds(const BigInt& p, std::uint64_t r, std::span<const std::uint64_t> set,
                           std::uint64_t h) {
  const BigInt s = ipow(p, r * h) - 1;
  const auto degrees = degrees_for(p, h, set);
  return diagonal::ac_predicts_solubility(diagonal::block_count(p, h) * s, degrees);
}

bool paper_condition_holds(const BigInt& p, std::uint64_t r, std::uint64_t M, std::uint64_t h) {
  return ipow(p, r * h) > 4 * BigInt(h + 1) * ipow(BigInt(M), 3) * ipow(p, h + 2);
}

std::uint64_t find_min_h(const BigInt& p, std::uint64_t r, std::uint64_t M,
                         std::span<const std::uint64_t> set, Mode mode) {
  validate_parameters(p, r, M, set);
  if (mode == Mode::kExact) {
    std::uint64_t h = least_h(p);
    while (!exact_condition_holds(p, r, set, h)) ++h;
    return h;
  }
  std::uint64_t h = std::max<std::uint64_t>(5, least_h(p));
  while (!paper_condition_holds(p, r, M, h)) ++h;
  return h;
}

CounterexampleReport build_counterexample(const BigInt& p, std::uint64_t r, std::uint64_t M,
                                          std::span<const std::uint64_t> set, Mode mode,
                                          const BuildOptions& options) {
  validate_parameters(p, r, M, set);
  CounterexampleReport report;
  report.p = p;
  report.r = r;
  report.M = M;
  report.set.assign(set.begin(), set.end());
  std::sort(report.set.begin(), report.set.end());
  report.mode = mode;

  if (options.h_override) {
    const std::uint64_t h = *options.h_override;
    if (h < least_h(p)) throw DomainError("h must be >= " + std::to_string(least_h(p)) + " for p = " + p.str());
    if (mode == Mode::kPaper && h < 5) throw DomainError("paper mode requires h >= 5");
    report.h = h;
  } else {
    report.h = find_min_h(p, r, M, report.set, mode);
  }

  report.W = diagonal::block_count(p, report.h);
  report.degrees = degrees_for(p, report.h, report.set);
  report.sum_degree_squares = diagonal::ac_threshold(report.degrees);
  report.s_min = report.sum_degree_squares / report.W + 1;
  report.s_max = ipow(p, r * report.h) - 1;
  report.s_chosen = options.s_override ? *options.s_override : report.s_max;
  if (report.s_chosen < 1) throw DomainError("s must be >= 1");
  report.total_variables = report.W * report.s_chosen;

  const diagonal::PowerSumSpec spec(p, report.h, M, report.set);
  report.system = diagonal::build_system(spec, report.s_chosen);
  report.certified = certify(report);

  if (!report.certified) {
    if (report.s_min > report.s_max) {
      report.diagnostic = "empty certified range: W = " + report.W.str() + ", s <= " +
                          report.s_max.str() + " gives W*s <= " + BigInt(report.W * report.s_max).str() +
                          ", not above sum d^2 = " + report.sum_degree_squares.str();
    } else {
      report.diagnostic = "s = " + report.s_chosen.str() + " lies outside the certified range [" +
                          report.s_min.str() + ", " + report.s_max.str() + "]";
    }
  }
  return report;
}

bool certify(const CounterexampleReport& report) {
  if (report.set.size() != report.r || report.r < 2) return false;
  const BigInt W = diagonal::block_count(report.p, report.h);
  const auto degrees = degrees_for(report.p, report.h, report.set);
  if (W != report.W || degrees != report.degrees) return false;
  if (diagonal::ac_threshold(degrees) != report.sum_degree_squares) return false;
  if (W * report.s_chosen != report.total_variables) return false;

  const bool ac_predicts = diagonal::ac_predicts_solubility(W * report.s_chosen, degrees);
  const bool forbidden = report.s_chosen < ipow(report.p, report.r * report.h);
  return ac_predicts && forbidden;
}

}  // namespace artin::cex
