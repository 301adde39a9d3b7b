#pragma once

#include <stdexcept>
#include <string>

namespace zerohecke {

/// Bad model tag, field spec, or other run configuration.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments of an operation does not hold.
struct ArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A configured size bound (group order, composition size) was exceeded.
struct OverflowError : std::overflow_error {
  using std::overflow_error::overflow_error;
};

}  // namespace zerohecke
