#pragma once

#include <stdexcept>
#include <string>

namespace f2p {

// Caller broke a documented precondition (width mismatch, bad sequence...).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Non-finite input where a finite real is required.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Unknown preset name or malformed format spec.
class LookupError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed or unusable input data (weight files, distribution strings).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Work refused because it would exceed a size or time budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// No parameter value reaches the requested counting range.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace f2p
