#pragma once

#include <stdexcept>
#include <string>

#include "vcmax/subset.hpp"

namespace vcmax {

/// Malformed or out-of-domain input: unknown labels, bad words, parse errors.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive enumeration would exceed the configured size cap.
class SizeError : public InputError {
 public:
  using InputError::InputError;
};

/// An operation's mathematical precondition does not hold for its input
/// (for example a check that requires a d-maximum family).
class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

/// A family is not maximum on a specific subset of its ground.
class NotMaximumError : public std::runtime_error {
 public:
  NotMaximumError(const std::string& what, Subset offending)
      : std::runtime_error(what), offending_(offending) {}
  Subset offending() const { return offending_; }

 private:
  Subset offending_;
};

/// Two routes that must agree did not; indicates a broken type invariant.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace vcmax
