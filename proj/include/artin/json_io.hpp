#pragma once

// JSON documents emitted by the CLI and the Python bindings. Integers that can
// grow without bound (s, sums of squares, coefficients) are decimal strings;
// small parameters (p, h, M, set members, W, degrees) are JSON numbers.

#include <cstddef>

#include "json.hpp"

#include "artin/congruence_search.hpp"
#include "artin/counterexample.hpp"
#include "artin/diagonal.hpp"
#include "artin/interpolation.hpp"
#include "artin/padic.hpp"

namespace artin::json_io {

using Json = nlohmann::ordered_json;

// Coefficient lists longer than this are cut and flagged "coefficients_truncated".
inline constexpr std::size_t kMaxListedCoefficients = 256;

Json to_json(const padic::Valuation& v);
Json to_json(const diagonal::PowerSumSpec& spec);
Json to_json(const diagonal::DiagonalSystem& system);
Json to_json(const search::UnitPowerClass& cls);
Json to_json(const search::SearchResult& result);
Json to_json(const search::Lemma22Verdict& verdict);
Json to_json(const interp::IntPolynomial& f);
Json to_json(const interp::InterpolationInstance& instance);
Json to_json(const interp::Lemma21Verdict& verdict);
Json to_json(const cex::CounterexampleReport& report);

}  // namespace artin::json_io
