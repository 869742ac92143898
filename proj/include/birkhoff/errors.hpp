#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace birkhoff {

/// A matrix expected to be invertible has deficient rank.
struct SingularMatrixError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Incompatible dimensions or composition endpoints.
struct ShapeMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Dominance comparison of partitions with different weights.
struct UnequalWeightError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A matrix that was required to be nilpotent of the ambient order is not.
struct NotNilpotentError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Operation undefined on the zero module.
struct ZeroModuleError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Preconditions of a degeneration move do not hold for the given data.
struct HypothesisViolatedError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A constructed sequence failed its exactness verification.  This is never
/// expected on admissible inputs and indicates a bug.
struct ExactnessFailureError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Modules that were required to share a dimension vector do not.
struct DimensionMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Malformed textual input; `position` is the byte offset of the offending
/// character.
struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}

  std::size_t position;
};

}  // namespace birkhoff
