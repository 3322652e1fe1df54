#pragma once

#include <stdexcept>
#include <string>

namespace taufact {

/// Malformed ring, tau or corpus specification.
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The operation is not available for this ring (usually: it is infinite).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its domain (unit target, zero in an
/// infinite ring, mismatched refinement, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A value fell outside the domain of a partial map (phi / phi inverse).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integer arithmetic left the 64-bit range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace taufact
