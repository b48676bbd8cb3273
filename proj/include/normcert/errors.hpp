#pragma once

#include <stdexcept>
#include <string>

namespace normcert {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the caller's input failed (bad level, mismatched
/// fields, inadmissible parameter). Maps to a usage error in the CLI.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The group is too large for exhaustive subgroup enumeration.
class BoundExceeded : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A mathematical hypothesis required by a criterion does not hold for
/// the given element (e.g. some conjugate ratio is not below one).
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// Two independent computations disagreed, or a claimed identity failed.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace normcert
