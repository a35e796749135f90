#pragma once

#include <stdexcept>
#include <string>

namespace wallach {

/// Bad arguments: unsupported family, size/constraint violations, malformed input.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Numerically dependent input where independence is required (e.g. Gram-Schmidt pivot collapse).
struct DegeneracyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A documented precondition between objects was violated (e.g. non-commuting involutions).
struct ContractViolation : std::logic_error {
  using std::logic_error::logic_error;
};

/// Request exceeds the configured desk-scale bounds.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Internal consistency failure (ranks not summing, construction self-checks).
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace wallach
