#pragma once

#include <stdexcept>
#include <string>

namespace kneserlab {

// Invalid arguments or violated operation preconditions (CLI exit code 2).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Work would exceed a configured budget: enumeration size, node limits,
// ground-set bit width (CLI exit code 3).
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace kneserlab
