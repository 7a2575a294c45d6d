#pragma once

#include <stdexcept>
#include <string>

namespace hornwave {

// Error categories map onto CLI exit codes: ConfigError -> 2,
// NumericalError (and subclasses) -> 3, IoError -> 4.

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain of a model function (q <= 0, x >= x0, ...).
class DomainError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// psi'(q) has a non-removable pole.
class SingularityError : public NumericalError {
 public:
  SingularityError(const std::string& what, double q) : NumericalError(what), q_(q) {}
  double q() const noexcept { return q_; }

 private:
  double q_;
};

/// Anchors violate q2 < q* < q0 < q1, or the anchor quadratic has no real root.
class ParameterRegimeError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class InvalidBranchError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class InternalConsistencyError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class ProbePlacementError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class PositivityError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class CflError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hornwave
