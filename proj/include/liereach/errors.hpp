#pragma once

#include <stdexcept>
#include <string>

namespace liereach {

/// Invalid index, mismatched algebra, bad cap and similar caller mistakes.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation's numerical precondition does not hold (non-skew input,
/// state outside the truncation interior, ...).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed configuration or command line. Maps to exit code 2.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Well-formed input that fails an algebraic check (Jacobi, antisymmetry,
/// skewness). Maps to exit code 3.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace liereach
