#pragma once

#include <stdexcept>
#include <string>

namespace balcx {

/// Raised when an operation's domain precondition is violated (bad labels,
/// mismatched fields, unbalanced input where a balanced one is required).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a search would exceed its configured budget. The verdict is
/// "undecided at this budget", never a wrong answer.
class BudgetExceeded : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace balcx
