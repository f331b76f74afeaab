#pragma once

#include <stdexcept>
#include <string>

namespace toradd {

/// Malformed or unusable input: parse failures, dimension mismatches,
/// ray systems that cannot come from a complete fan.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public InputError {
 public:
  using InputError::InputError;
};

/// The ray system admits no additive action, so the requested question
/// (uniqueness, witnesses) has no answer.
class NoAdditiveAction : public std::runtime_error {
 public:
  NoAdditiveAction() : std::runtime_error("no additive action exists") {}
};

/// Raised when a witness pair is requested but the additive action is unique.
class UniquenessHolds : public std::runtime_error {
 public:
  UniquenessHolds() : std::runtime_error("uniqueness holds; no witness exists") {}
};

/// A cross-check between independently computed quantities failed. Never
/// expected on valid input; signals a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace toradd
