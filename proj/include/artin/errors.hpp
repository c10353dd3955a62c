#pragma once

#include <stdexcept>
#include <string>

namespace artin {

// Precondition or argument violation: bad prime, non-unit, malformed spec.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// A configured resource cap (state budget, coefficient cap) would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace artin
