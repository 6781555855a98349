#pragma once

#include <stdexcept>
#include <string>

namespace tropbn {

/// Invalid input supplied by the caller (malformed file, bad parameter, violated precondition).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A postcondition or theorem-backed invariant failed; indicates a bug, not bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tropbn
