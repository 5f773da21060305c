#pragma once

#include <stdexcept>
#include <string>

namespace isoparam {

// Caller violated an operation's precondition (bad dimension, malformed input).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computed object failed a structural postcondition. Raising this means a
// claimed identity does not hold for the inputs at hand.
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Division by zero in exact evaluation.
class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// det B(r) vanished: r is a focal distance of the hypersurface.
class FocalPointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The rho-function reached |rho| = 1 and the graph stops being a graph.
class DegenerationError : public std::runtime_error {
 public:
  explicit DegenerationError(const std::string& what, double at = 0.0)
      : std::runtime_error(what), location_(at) {}
  double location() const noexcept { return location_; }

 private:
  double location_;
};

}  // namespace isoparam
