#include "artin/bigint.hpp"

#include <limits>

#include "artin/errors.hpp"

namespace artin {

BigInt ipow(const BigInt& base, std::uint64_t exp) {
  BigInt result = 1;
  BigInt b = base;
  while (exp != 0) {
    if (exp & 1U) result *= b;
    exp >>= 1U;
    if (exp != 0) b *= b;
  }
  return result;
}

BigInt mod_floor(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

std::string to_decimal(const BigInt& n) { return n.str(); }

BigInt parse_bigint(std::string_view text) {
  std::size_t i = 0;
  if (!text.empty() && text[0] == '-') i = 1;
  if (i == text.size()) {
    throw DomainError("expected an integer, got '" + std::string(text) + "'");
  }
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') {
      throw DomainError("expected an integer, got '" + std::string(text) + "'");
    }
  }
  return BigInt(std::string(text));
}

std::uint64_t to_u64(const BigInt& n, std::string_view what) {
  if (n < 0 || n > std::numeric_limits<std::uint64_t>::max()) {
    throw DomainError(std::string(what) + " out of 64-bit unsigned range: " + n.str());
  }
  return n.convert_to<std::uint64_t>();
}

std::int64_t to_i64(const BigInt& n, std::string_view what) {
  if (n < std::numeric_limits<std::int64_t>::min() ||
      n > std::numeric_limits<std::int64_t>::max()) {
    throw DomainError(std::string(what) + " out of 64-bit signed range: " + n.str());
  }
  return n.convert_to<std::int64_t>();
}

}  // namespace artin
