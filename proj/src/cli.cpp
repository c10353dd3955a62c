#include "artin/cli.hpp"

#include <optional>
#include <sstream>
#include <vector>

#include "CLI11.hpp"

#include "artin/congruence_search.hpp"
#include "artin/counterexample.hpp"
#include "artin/diagonal.hpp"
#include "artin/errors.hpp"
#include "artin/interpolation.hpp"
#include "artin/json_io.hpp"
#include "artin/padic.hpp"

namespace artin::cli {

namespace {

using json_io::Json;

// Raw flag text; every numeric flag is parsed exactly after CLI11 is done.
struct Flags {
  std::string p, h, M, r, set, s, n_max, trials, seed, state_budget, k, g, value;
  std::string mode = "exact";
  bool json = false;
};

std::uint64_t parse_u64(const std::string& text, const char* flag) {
  try {
    return to_u64(parse_bigint(text), flag);
  } catch (const DomainError&) {
    throw DomainError(std::string(flag) + ": expected a nonnegative integer, got '" + text + "'");
  }
}

std::optional<std::uint64_t> optional_u64(const std::string& text, const char* flag) {
  if (text.empty()) return std::nullopt;
  return parse_u64(text, flag);
}

std::vector<std::uint64_t> parse_set(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) out.push_back(parse_u64(item, "--set"));
  if (out.empty()) throw DomainError("--set: expected comma-separated integers");
  return out;
}

// --set when given, otherwise the r smallest integers of [M, 2M).
std::vector<std::uint64_t> degree_set(const Flags& f, std::uint64_t M, std::uint64_t default_r) {
  if (!f.set.empty()) {
    auto set = parse_set(f.set);
    if (!f.r.empty() && parse_u64(f.r, "--r") != set.size()) {
      throw DomainError("--r disagrees with the size of --set");
    }
    return set;
  }
  const auto r = f.r.empty() ? default_r : parse_u64(f.r, "--r");
  return diagonal::default_degree_set(M, r);
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string join(const std::vector<std::uint64_t>& values, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

std::string join(const std::vector<BigInt>& values, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += sep;
    out += values[i].str();
  }
  return out;
}

int cmd_gen(const Flags& f, std::ostream& out, std::ostream& err) {
  const BigInt p = parse_bigint(f.p);
  const auto M = parse_u64(f.M, "--M");
  if (f.r.empty() && f.set.empty()) throw DomainError("gen: give --r or --set");
  if (!f.r.empty() && parse_u64(f.r, "--r") < 2) {
    throw DomainError("r >= 2 required (got r = " + f.r + ")");
  }
  const auto set = degree_set(f, M, 0);
  const auto mode = cex::parse_mode(f.mode);
  cex::BuildOptions options;
  options.h_override = optional_u64(f.h, "--h");
  if (!f.s.empty()) options.s_override = parse_bigint(f.s);

  const auto report = cex::build_counterexample(p, set.size(), M, set, mode, options);
  if (f.json) {
    emit(out, json_io::to_json(report));
  } else {
    out << "counterexample (" << cex::to_string(report.mode) << " mode)\n"
        << "p = " << report.p << ", r = " << report.r << ", M = " << report.M << ", set = {"
        << join(report.set) << "}\n"
        << "h = " << report.h << ", W = " << report.W << "\n"
        << "degrees = (" << join(report.degrees) << "), sum of squares = "
        << report.sum_degree_squares << "\n"
        << "s range = [" << report.s_min << ", " << report.s_max << "], s = " << report.s_chosen
        << "\n"
        << "total variables = " << report.total_variables << "\n"
        << "certified: " << (report.certified ? "yes" : "no") << "\n";
  }
  if (!report.certified) {
    err << "certification failed: " << report.diagnostic << "\n";
    return kCertificationFailure;
  }
  return kOk;
}

int cmd_min_n(const Flags& f, std::ostream& out, std::ostream& err) {
  const BigInt p = parse_bigint(f.p);
  const auto h = parse_u64(f.h, "--h");
  const auto M = parse_u64(f.M, "--M");
  const diagonal::PowerSumSpec spec(p, h, M, degree_set(f, M, 1));
  search::SearchOptions options;
  if (!f.state_budget.empty()) options.state_budget = parse_u64(f.state_budget, "--state-budget");
  const auto n_max = f.n_max.empty() ? search::default_n_max(spec) : parse_u64(f.n_max, "--n-max");

  const auto result = search::minimal_solution_size(spec, n_max, options);
  const auto verdict = search::verify_lemma22(spec, result);
  if (f.json) {
    Json j;
    j["spec"] = json_io::to_json(spec);
    j["result"] = json_io::to_json(result);
    j["lemma22"] = json_io::to_json(verdict);
    emit(out, j);
  } else if (result.found()) {
    out << "minimal N = " << *result.minimal_n << " (search bound " << result.search_bound << ")\n"
        << "witness:";
    for (const auto& entry : result.witness) {
      out << " " << entry.unit_class.representative << "^" << entry.count;
    }
    out << "\n"
        << "p^{Kh} = " << verdict.lower_bound << ": N >= p^{Kh} "
        << (verdict.bound_holds ? "holds" : "FAILS") << ", p^{Kh} | N "
        << (verdict.divisibility_holds ? "holds" : "FAILS") << "\n";
  } else {
    out << "no solution with N <= " << result.search_bound << " (vacuous)\n";
  }
  if (verdict.status == search::Lemma22Status::kViolated) {
    err << "internal error: search result contradicts the divisibility lemma\n";
    return kCertificationFailure;
  }
  return kOk;
}

int cmd_lemma21(const Flags& f, std::ostream& out, std::ostream& err) {
  const auto trials = f.trials.empty() ? std::uint64_t{500} : parse_u64(f.trials, "--trials");
  const auto seed = f.seed.empty() ? std::uint64_t{0} : parse_u64(f.seed, "--seed");
  const auto fixed_p = f.p.empty() ? std::optional<BigInt>{} : parse_bigint(f.p);
  const auto fixed_h = optional_u64(f.h, "--h");
  const auto fixed_K = optional_u64(f.r, "--K");
  const auto fixed_M = optional_u64(f.M, "--M");

  // Unfixed parameters cycle through p in {2,3,5}, h <= 3, K <= 3, M <= 4.
  static constexpr std::uint64_t kPrimes[] = {2, 3, 5};
  Json instances = Json::array();
  std::uint64_t violations = 0;
  std::optional<std::int64_t> min_slack;
  for (std::uint64_t i = 0; i < trials; ++i) {
    const BigInt p = fixed_p ? *fixed_p : BigInt(kPrimes[i % 3]);
    const auto h = fixed_h ? *fixed_h : 1 + (i / 3) % 3;
    const auto K = fixed_K ? *fixed_K : 1 + (i / 9) % 3;
    const auto M = fixed_M ? *fixed_M : 1 + (i / 27) % 4;
    const auto instance = interp::random_instance(p, h, K, M, seed + i);
    const auto verdict = interp::verify_instance(instance);
    if (!verdict.holds) ++violations;
    if (!verdict.ord_fa.is_infinite()) {
      const auto slack = verdict.ord_fa.value() - verdict.bound;
      min_slack = min_slack ? std::min(*min_slack, slack) : slack;
    }
    if (f.json) {
      Json j = json_io::to_json(instance);
      j["seed"] = seed + i;
      j["verdict"] = json_io::to_json(verdict);
      instances.push_back(std::move(j));
    }
  }
  if (f.json) {
    Json j;
    j["trials"] = trials;
    j["seed"] = seed;
    j["violations"] = violations;
    j["min_slack"] = min_slack ? Json(*min_slack) : Json(nullptr);
    j["note"] = "the bound is a theorem; any violation indicates an implementation error";
    j["instances"] = std::move(instances);
    emit(out, j);
  } else {
    out << "instances: " << trials << ", violations: " << violations << "\n";
    if (min_slack) out << "least slack ord f(a) - bound: " << *min_slack << "\n";
  }
  if (violations != 0) {
    err << "internal error: " << violations << " instance(s) violate the interpolation bound\n";
    return kCertificationFailure;
  }
  return kOk;
}

padic::Valuation parse_and_ord(const std::string& value, const BigInt& p) {
  const auto slash = value.find('/');
  if (slash == std::string::npos) return padic::ord(parse_bigint(value), p);
  return padic::ord(parse_bigint(value.substr(0, slash)), parse_bigint(value.substr(slash + 1)), p);
}

int cmd_ord(const Flags& f, std::ostream& out) {
  const BigInt p = parse_bigint(f.p);
  const auto v = parse_and_ord(f.value, p);
  if (f.json) {
    Json j;
    j["value"] = f.value;
    j["p"] = p.str();
    j["ord"] = json_io::to_json(v);
    emit(out, j);
  } else {
    out << v.to_string() << "\n";
  }
  return kOk;
}

int cmd_dlog(const Flags& f, std::ostream& out) {
  const BigInt p = parse_bigint(f.p);
  const auto k = parse_u64(f.k, "--k");
  const BigInt x = parse_bigint(f.value);
  const padic::PrimePowerModulus modulus(p, k);
  Json j;
  j["x"] = x.str();
  j["modulus"] = modulus.value().str();
  if (p == 2) {
    const auto d = padic::unit_decomposition_2k(x, k);
    j["epsilon"] = d.epsilon;
    j["exponent"] = d.exponent.str();
    if (!f.json) out << "(-1)^" << d.epsilon << " * 5^" << d.exponent << "\n";
  } else {
    const BigInt g = f.g.empty() ? padic::primitive_root(p) : parse_bigint(f.g);
    const BigInt a = padic::discrete_log(x, g, modulus);
    j["g"] = g.str();
    j["log"] = a.str();
    if (!f.json) out << a << "\n";
  }
  if (f.json) emit(out, j);
  return kOk;
}

int cmd_phi(const Flags& f, std::ostream& out) {
  const BigInt p = parse_bigint(f.p);
  const auto h = parse_u64(f.h, "--h");
  const BigInt phi = padic::euler_phi_prime_power(p, h);
  if (f.json) {
    Json j;
    j["p"] = p.str();
    j["h"] = h;
    j["phi"] = phi.str();
    emit(out, j);
  } else {
    out << phi << "\n";
  }
  return kOk;
}

int cmd_system(const Flags& f, std::ostream& out) {
  const BigInt p = parse_bigint(f.p);
  const auto h = parse_u64(f.h, "--h");
  const auto M = parse_u64(f.M, "--M");
  const diagonal::PowerSumSpec spec(p, h, M, degree_set(f, M, 1));
  const auto system = diagonal::build_system(spec, parse_bigint(f.s));
  if (f.json) {
    emit(out, json_io::to_json(system));
  } else {
    out << "W = " << system.block_count() << ", s = " << system.variables_per_block()
        << ", total variables = " << system.total_variables() << "\n"
        << "degrees = (" << join(system.degrees()) << ")\n"
        << "coefficient ratio p^{(h+1)M} = " << system.coefficient_ratio() << "\n"
        << "AC threshold = " << diagonal::ac_threshold(system.degrees()) << ", AC predicts a zero: "
        << (diagonal::ac_predicts_solubility(system.total_variables(), system.degrees()) ? "yes" : "no")
        << "\n";
  }
  return kOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact certificates and brute-force checks for diagonal systems modulo prime powers",
               "artin"};
  // --h is a parameter here, so help is long-form only.
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1, 1);
  Flags f;

  auto json = [&f](CLI::App* cmd) { cmd->add_flag("--json", f.json, "emit a single JSON document"); };

  auto* gen = app.add_subcommand("gen", "certify a failure of Artin's Conjecture");
  gen->add_option("--p", f.p, "prime")->required();
  gen->add_option("--r", f.r, "number of equations");
  gen->add_option("--M", f.M, "degree scale M")->required();
  gen->add_option("--set", f.set, "comma-separated degree set in [M, 2M)");
  gen->add_option("--mode", f.mode, "exact | paper");
  gen->add_option("--h", f.h, "use this h instead of the least certifying one");
  gen->add_option("--s", f.s, "variables per block (default p^{rh} - 1)");
  json(gen);

  auto* min_n = app.add_subcommand("min-n", "least N solving the power-sum congruences");
  min_n->add_option("--p", f.p, "prime")->required();
  min_n->add_option("--h", f.h, "h")->required();
  min_n->add_option("--M", f.M, "M")->required();
  min_n->add_option("--set", f.set, "comma-separated degree set in [M, 2M)");
  min_n->add_option("--r", f.r, "size of the default degree set");
  min_n->add_option("--n-max", f.n_max, "largest N searched (default 4 p^{Kh})");
  min_n->add_option("--state-budget", f.state_budget, "cap on p^{(h+1)MK}");
  json(min_n);

  auto* lemma21 = app.add_subcommand("lemma21", "check the interpolation bound on random instances");
  lemma21->add_option("--p", f.p, "fix the prime");
  lemma21->add_option("--h", f.h, "fix h");
  lemma21->add_option("--r,--K", f.r, "fix the node count K");
  lemma21->add_option("--M", f.M, "fix M");
  lemma21->add_option("--trials", f.trials, "number of instances (default 500)");
  lemma21->add_option("--seed", f.seed, "base seed (default 0)");
  json(lemma21);

  auto* ord = app.add_subcommand("ord", "p-adic valuation of an integer or fraction n/d");
  ord->add_option("value", f.value, "n or n/d")->required();
  ord->add_option("--p", f.p, "prime")->required();
  json(ord);

  auto* dlog = app.add_subcommand("dlog", "discrete logarithm mod p^k ((-1,5) form for p = 2)");
  dlog->add_option("value", f.value, "unit residue")->required();
  dlog->add_option("--p", f.p, "prime")->required();
  dlog->add_option("--k", f.k, "exponent of the modulus p^k")->required();
  dlog->add_option("--g", f.g, "generator (default: least primitive root)");
  json(dlog);

  auto* phi = app.add_subcommand("phi", "Euler phi of p^h");
  phi->add_option("--p", f.p, "prime")->required();
  phi->add_option("--h", f.h, "h")->required();
  json(phi);

  auto* system = app.add_subcommand("system", "parameters of the block-diagonal system");
  system->add_option("--p", f.p, "prime")->required();
  system->add_option("--h", f.h, "h")->required();
  system->add_option("--M", f.M, "M")->required();
  system->add_option("--set", f.set, "comma-separated degree set in [M, 2M)");
  system->add_option("--r", f.r, "size of the default degree set");
  system->add_option("--s", f.s, "variables per block")->required();
  json(system);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kDomainError;
  }

  try {
    if (gen->parsed()) return cmd_gen(f, out, err);
    if (min_n->parsed()) return cmd_min_n(f, out, err);
    if (lemma21->parsed()) return cmd_lemma21(f, out, err);
    if (ord->parsed()) return cmd_ord(f, out);
    if (dlog->parsed()) return cmd_dlog(f, out);
    if (phi->parsed()) return cmd_phi(f, out);
    if (system->parsed()) return cmd_system(f, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << "\n";
    return kResourceError;
  }
  return kDomainError;
}

}  // namespace artin::cli
