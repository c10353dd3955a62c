#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace artin {

using BigInt = boost::multiprecision::cpp_int;

// base^exp by square-and-multiply, exact.
BigInt ipow(const BigInt& base, std::uint64_t exp);

// Least nonnegative residue of a modulo m (m > 0).
BigInt mod_floor(const BigInt& a, const BigInt& m);

std::string to_decimal(const BigInt& n);

// Strict decimal parser: optional '-', then digits only. Throws DomainError.
BigInt parse_bigint(std::string_view text);

// Checked narrowing; throws DomainError naming `what` when out of range.
std::uint64_t to_u64(const BigInt& n, std::string_view what);
std::int64_t to_i64(const BigInt& n, std::string_view what);

}  // namespace artin
