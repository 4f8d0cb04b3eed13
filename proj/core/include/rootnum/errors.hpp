#pragma once

#include <stdexcept>
#include <string>

namespace rootnum {

// Input violates a precondition or a type invariant.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A finite computation cannot certify its answer at the given truncation.
class Inconclusive : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An enumeration would exceed its size budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The request is well formed but outside what the method covers.
class OutOfScope : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace rootnum
