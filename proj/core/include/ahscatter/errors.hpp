#pragma once

#include <stdexcept>
#include <string>

namespace ahscatter {

/// Base class for every error raised by the library. The CLI maps these to
/// exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside the mathematical domain of an operation (pole, x <= 0, lambda
/// outside D_eps, even n where odd is required, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Spectral parameter sits on a Gamma pole / integer Bessel order / log-depth cap.
class ResonanceError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Precondition on an argument's structure was violated (wrong fiber
/// dimension, leading vector outside the indicial eigenspace, ...).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

class SingularError : public DomainError {
 public:
  using DomainError::DomainError;
};

class IntegrationError : public Error {
 public:
  using Error::Error;
};

class IllConditionedError : public Error {
 public:
  using Error::Error;
};

/// Should be unreachable for the model operators; signals a logic bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace ahscatter
