#pragma once

#include <stdexcept>
#include <string>

namespace primechar {

/// Argument outside an operation's domain (non-prime modulus, k = 0, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidBase : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

/// Raised by exact division when the divisor does not divide the dividend.
class NotDivisible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Subtraction that would leave the naturals.
class Underflow : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotComposite : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A congruence that is proven to hold (or fail) was observed otherwise.
/// This always indicates an implementation bug, never a mathematical result.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace primechar
