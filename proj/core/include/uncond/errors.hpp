#pragma once

#include <stdexcept>
#include <string>

namespace uncond {

/// Input outside an operation's domain (invalid exponent, Hoelder-invalid
/// triple, degenerate family, size cap exceeded).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A valid request whose construction exceeds the desk-scale caps.
class ScaleLimitError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Two independently implemented routes disagree, e.g. the classifier
/// reports NotPreserves but the matching witness cannot be built.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace uncond
