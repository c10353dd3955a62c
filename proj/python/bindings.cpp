#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "artin/cli.hpp"
#include "artin/congruence_search.hpp"
#include "artin/counterexample.hpp"
#include "artin/errors.hpp"
#include "artin/interpolation.hpp"
#include "artin/json_io.hpp"
#include "artin/padic.hpp"

namespace py = pybind11;
using artin::BigInt;

// Python int <-> BigInt through the decimal representation.
namespace pybind11::detail {
template <>
struct type_caster<BigInt> {
  PYBIND11_TYPE_CASTER(BigInt, const_name("int"));

  bool load(handle src, bool) {
    if (!src || !PyLong_Check(src.ptr())) return false;
    value = artin::parse_bigint(py::str(src).cast<std::string>());
    return true;
  }

  static handle cast(const BigInt& v, return_value_policy, handle) {
    return PyLong_FromString(v.str().c_str(), nullptr, 10);
  }
};
}  // namespace pybind11::detail

namespace {

using Set = std::vector<std::uint64_t>;

py::object valuation(const artin::padic::Valuation& v) {
  if (v.is_infinite()) return py::float_(std::numeric_limits<double>::infinity());
  return py::int_(v.value());
}

artin::cex::Mode mode_of(const std::string& mode) { return artin::cex::parse_mode(mode); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact p-adic tools and certificates for diagonal systems";

  py::register_exception<artin::ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  // p-adic core
  m.def("ord", [](const BigInt& n, const BigInt& p, const BigInt& den) {
    return valuation(artin::padic::ord(n, den, p));
  }, py::arg("n"), py::arg("p"), py::arg("den") = BigInt(1));
  m.def("euler_phi", &artin::padic::euler_phi_prime_power, py::arg("p"), py::arg("h"));
  m.def("primitive_root", &artin::padic::primitive_root, py::arg("p"));
  m.def("pow_mod", [](const BigInt& b, const BigInt& e, const BigInt& mod) {
    return artin::padic::pow_mod(b, e, mod);
  }, py::arg("base"), py::arg("exp"), py::arg("modulus"));
  m.def("discrete_log", [](const BigInt& x, const BigInt& g, const BigInt& p, std::uint64_t k) {
    return artin::padic::discrete_log(x, g, artin::padic::PrimePowerModulus(p, k));
  }, py::arg("x"), py::arg("g"), py::arg("p"), py::arg("k"));
  m.def("unit_decomposition_2k", [](const BigInt& x, std::uint64_t k) {
    const auto d = artin::padic::unit_decomposition_2k(x, k);
    return py::make_tuple(d.epsilon, d.exponent);
  }, py::arg("x"), py::arg("k"));
  m.def("factorial_valuation", &artin::padic::factorial_valuation, py::arg("n"), py::arg("p"));
  m.def("ord_power_minus_one", [](const BigInt& g, const BigInt& q, const BigInt& s, const BigInt& p,
                                  std::uint64_t h) {
    return valuation(artin::padic::ord_power_minus_one(g, q, s, p, h));
  }, py::arg("g"), py::arg("q"), py::arg("s"), py::arg("p"), py::arg("h"));

  // diagonal systems
  m.def("block_count", &artin::diagonal::block_count, py::arg("p"), py::arg("h"));
  m.def("ac_threshold", [](const std::vector<BigInt>& degrees) {
    return artin::diagonal::ac_threshold(degrees);
  }, py::arg("degrees"));
  m.def("_system_json", [](const BigInt& p, std::uint64_t h, std::uint64_t M, const Set& set,
                           const BigInt& s) {
    const artin::diagonal::PowerSumSpec spec(p, h, M, set);
    return artin::json_io::to_json(artin::diagonal::build_system(spec, s)).dump();
  });
  m.def("evaluate_system", [](const BigInt& p, std::uint64_t h, std::uint64_t M, const Set& set,
                              const BigInt& s, const std::vector<BigInt>& x, std::uint64_t k) {
    const auto system = artin::diagonal::build_system(artin::diagonal::PowerSumSpec(p, h, M, set), s);
    std::optional<artin::padic::PrimePowerModulus> modulus;
    if (k > 0) modulus.emplace(p, k);
    return artin::diagonal::evaluate_system(system, x, modulus);
  }, py::arg("p"), py::arg("h"), py::arg("M"), py::arg("set"), py::arg("s"), py::arg("x"),
     py::arg("k") = 0);

  // congruence search
  m.def("_min_n_json", [](const BigInt& p, std::uint64_t h, std::uint64_t M, const Set& set,
                          std::optional<std::uint64_t> n_max, std::uint64_t state_budget,
                          unsigned threads) {
    const artin::diagonal::PowerSumSpec spec(p, h, M, set);
    artin::search::SearchOptions options;
    options.state_budget = state_budget;
    options.threads = threads;
    const auto bound = n_max ? *n_max : artin::search::default_n_max(spec);
    artin::search::SearchResult result;
    {
      py::gil_scoped_release release;
      result = artin::search::minimal_solution_size(spec, bound, options);
    }
    artin::json_io::Json j;
    j["spec"] = artin::json_io::to_json(spec);
    j["result"] = artin::json_io::to_json(result);
    j["lemma22"] = artin::json_io::to_json(artin::search::verify_lemma22(spec, result));
    return j.dump();
  });
  m.attr("DEFAULT_STATE_BUDGET") = artin::search::kDefaultStateBudget;
  m.def("check_congruence_witness", [](const BigInt& p, std::uint64_t h, std::uint64_t M,
                                       const Set& set, const std::vector<BigInt>& x) {
    return artin::search::check_congruence_witness(artin::diagonal::PowerSumSpec(p, h, M, set), x);
  }, py::arg("p"), py::arg("h"), py::arg("M"), py::arg("set"), py::arg("x"));

  // interpolation
  m.def("compute_L", [](const BigInt& p, const std::vector<BigInt>& nodes) {
    return artin::interp::compute_L(p, nodes);
  }, py::arg("p"), py::arg("nodes"));
  m.def("interpolation_bound", &artin::interp::interpolation_bound, py::arg("K"), py::arg("h"),
        py::arg("L"), py::arg("M"));
  m.def("structured_nodes", [](const BigInt& p, std::uint64_t h, std::uint64_t M, const Set& set) {
    const auto mode = p == 2 ? artin::interp::NodeMode::kPowersOfFive : artin::interp::NodeMode::kPrimitiveRoot;
    return artin::interp::structured_nodes(p, h, M, set, mode);
  }, py::arg("p"), py::arg("h"), py::arg("M"), py::arg("set"));
  m.def("node_valuation_bound_check", [](const BigInt& p, std::uint64_t h, std::uint64_t M, const Set& set) {
    return artin::interp::node_valuation_bound_check(artin::diagonal::PowerSumSpec(p, h, M, set));
  }, py::arg("p"), py::arg("h"), py::arg("M"), py::arg("set"));
  m.def("_lemma21_json", [](const BigInt& p, std::uint64_t h, std::uint64_t K, std::uint64_t M,
                            std::uint64_t seed) {
    const auto instance = artin::interp::random_instance(p, h, K, M, seed);
    auto j = artin::json_io::to_json(instance);
    j["verdict"] = artin::json_io::to_json(artin::interp::verify_instance(instance));
    return j.dump();
  });

  // counterexamples
  m.def("find_min_h", [](const BigInt& p, std::uint64_t M, const Set& set, const std::string& mode) {
    return artin::cex::find_min_h(p, set.size(), M, set, mode_of(mode));
  }, py::arg("p"), py::arg("M"), py::arg("set"), py::arg("mode") = "exact");
  m.def("_counterexample_json", [](const BigInt& p, std::uint64_t M, const Set& set,
                                   const std::string& mode, std::optional<std::uint64_t> h,
                                   std::optional<BigInt> s) {
    artin::cex::BuildOptions options;
    options.h_override = h;
    options.s_override = s;
    const auto report = artin::cex::build_counterexample(p, set.size(), M, set, mode_of(mode), options);
    return artin::json_io::to_json(report).dump();
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = artin::cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
