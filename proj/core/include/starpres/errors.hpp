#pragma once

#include <stdexcept>
#include <string>

namespace starpres {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a request exceeds a configured resource bound (e.g. subgroup
// index or family size); callers may retry with an explicit larger bound.
struct ResourceLimitError : std::runtime_error {
  explicit ResourceLimitError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace starpres
