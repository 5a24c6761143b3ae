#pragma once

#include <stdexcept>
#include <string>

namespace charvar {

/// Bad user input: rejected rank, malformed datum, twist outside the center, ...
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An internal consistency check failed. CLI maps this to exit code 3.
struct InvariantViolation : std::logic_error {
  explicit InvariantViolation(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace charvar
