#pragma once

#include <stdexcept>
#include <string>

namespace excludant {

// Bad input: malformed literal, class violation, unsupported request.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Work would exceed a configured enumeration or truncation budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace excludant
