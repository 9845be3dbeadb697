#pragma once

#include <stdexcept>

namespace opconv {

// An eigenvalue or scalar argument lies outside a function's domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed matrix document.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numeric backend failure (eigensolver non-convergence).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace opconv
