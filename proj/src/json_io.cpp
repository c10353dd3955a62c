#include "artin/json_io.hpp"

namespace artin::json_io {

namespace {

Json number(const BigInt& n) { return to_u64(n, "JSON number"); }

Json decimal(const BigInt& n) { return n.str(); }

Json decimals(const std::vector<BigInt>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v.str());
  return out;
}

Json numbers(const std::vector<BigInt>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(number(v));
  return out;
}

void add_coefficients(Json& j, const diagonal::DiagonalSystem& system) {
  const bool truncated = system.block_count() > kMaxListedCoefficients;
  const auto listed = truncated ? kMaxListedCoefficients
                                : system.block_count().convert_to<std::size_t>();
  Json coeffs = Json::array();
  BigInt c = 1;
  for (std::size_t l = 0; l < listed; ++l) {
    coeffs.push_back(c.str());
    c *= system.coefficient_ratio();
  }
  j["coefficients"] = std::move(coeffs);
  j["coefficient_ratio"] = decimal(system.coefficient_ratio());
  if (truncated) j["coefficients_truncated"] = true;
}

}  // namespace

Json to_json(const padic::Valuation& v) {
  if (v.is_infinite()) return "infinity";
  return v.value();
}

Json to_json(const diagonal::PowerSumSpec& spec) {
  Json j;
  j["p"] = number(spec.p());
  j["h"] = spec.h();
  j["M"] = spec.M();
  j["set"] = spec.set();
  j["K"] = spec.K();
  return j;
}

Json to_json(const diagonal::DiagonalSystem& system) {
  const auto& spec = system.spec();
  Json j;
  j["p"] = number(spec.p());
  j["h"] = spec.h();
  j["M"] = spec.M();
  j["set"] = spec.set();
  j["W"] = number(system.block_count());
  j["s"] = decimal(system.variables_per_block());
  j["total_vars"] = decimal(system.total_variables());
  j["degrees"] = numbers(system.degrees());
  add_coefficients(j, system);
  return j;
}

Json to_json(const search::UnitPowerClass& cls) {
  Json j;
  j["representative"] = cls.representative;
  j["value_vector"] = cls.value_vector;
  j["multiplicity"] = cls.multiplicity;
  return j;
}

Json to_json(const search::SearchResult& result) {
  Json j;
  j["found"] = result.found();
  j["minimal_N"] = result.found() ? Json(*result.minimal_n) : Json(nullptr);
  Json witness = Json::array();
  for (const auto& entry : result.witness) {
    Json e;
    e["representative"] = entry.unit_class.representative;
    e["value_vector"] = entry.unit_class.value_vector;
    e["count"] = entry.count;
    witness.push_back(std::move(e));
  }
  j["witness"] = std::move(witness);
  j["search_bound"] = result.search_bound;
  return j;
}

Json to_json(const search::Lemma22Verdict& verdict) {
  Json j;
  j["status"] = search::to_string(verdict.status);
  j["p_Kh"] = decimal(verdict.lower_bound);
  j["bound_holds"] = verdict.bound_holds;
  j["divisibility_holds"] = verdict.divisibility_holds;
  return j;
}

Json to_json(const interp::IntPolynomial& f) { return decimals(f.coefficients()); }

Json to_json(const interp::InterpolationInstance& instance) {
  Json j;
  j["p"] = number(instance.p());
  j["h"] = instance.h();
  j["K"] = instance.K();
  j["M"] = instance.M();
  j["a"] = decimal(instance.a());
  j["nodes"] = decimals(instance.nodes());
  j["f"] = to_json(instance.f());
  return j;
}

Json to_json(const interp::Lemma21Verdict& verdict) {
  Json j;
  j["ord_fa"] = to_json(verdict.ord_fa);
  j["L"] = verdict.L;
  j["bound"] = verdict.bound;
  j["holds"] = verdict.holds;
  return j;
}

Json to_json(const cex::CounterexampleReport& report) {
  Json j;
  j["p"] = number(report.p);
  j["r"] = report.r;
  j["M"] = report.M;
  j["set"] = report.set;
  j["h"] = report.h;
  j["W"] = number(report.W);
  j["s"] = decimal(report.s_chosen);
  j["s_range"] = Json::array({decimal(report.s_min), decimal(report.s_max)});
  j["degrees"] = numbers(report.degrees);
  j["sum_d_sq"] = decimal(report.sum_degree_squares);
  j["total_vars"] = decimal(report.total_variables);
  j["mode"] = cex::to_string(report.mode);
  j["certified"] = report.certified;
  if (!report.diagnostic.empty()) j["diagnostic"] = report.diagnostic;
  if (report.system) add_coefficients(j, *report.system);
  return j;
}

}  // namespace artin::json_io
