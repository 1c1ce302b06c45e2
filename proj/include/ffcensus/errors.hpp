#pragma once

#include <stdexcept>
#include <string>

namespace ffcensus {

// Malformed or out-of-contract input (non-prime characteristic, bad
// polynomial text, non-monic argument where monic is required, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive scan would exceed the configured enumeration budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed; the arithmetic is wrong somewhere.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ffcensus
