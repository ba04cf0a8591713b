#pragma once

#include <stdexcept>
#include <string>

namespace wcp {

// Malformed instance, unknown vertex, bad argument.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// No initialization strategy could route every turbine.
class InitializationError : public std::runtime_error {
 public:
  InitializationError()
      : std::runtime_error("no feasible initial flow of finite cost") {}
  explicit InitializationError(const std::string& what)
      : std::runtime_error(what) {}
};

// The exact oracle refuses instances above its size caps.
class OracleRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A solver invariant was violated. Always a bug.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace wcp
