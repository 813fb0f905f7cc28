#pragma once

#include <stdexcept>
#include <string>

namespace wlab {

/// Malformed or out-of-contract input. The CLI maps it to exit code 2.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A cross-check or audit that did not hold. The CLI maps it to exit code 1.
class VerificationError : public std::runtime_error {
 public:
  explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wlab
