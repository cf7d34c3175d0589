#pragma once

#include <stdexcept>
#include <string>

namespace symgraph {

// A caller violated a documented precondition (bad parameters, malformed input).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Polynomials from different ambient rings were combined.
class AmbientMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

// An exact expansion would exceed the configured size limits.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two independent computations of the same quantity disagreed.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace symgraph
