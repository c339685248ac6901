#pragma once

#include <stdexcept>
#include <string>

namespace hyperfactor {

/// A caller supplied arguments outside an operation's domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal invariant failed. Always a bug or corrupted input state,
/// never an expected outcome.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The requested instance exceeds a configured size or work limit.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input text did not match a file format.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hyperfactor
