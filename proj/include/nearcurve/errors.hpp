#pragma once

#include <stdexcept>
#include <string>

namespace nearcurve {

// Bad input of any kind. The CLI maps these to exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public InputError {
 public:
  using InputError::InputError;
};

class DimensionError : public InputError {
 public:
  using InputError::InputError;
};

class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

// Duplicate abscissae where distinct ones are required.
class DegenerateInputError : public InputError {
 public:
  using InputError::InputError;
};

class WorkLimitError : public InputError {
 public:
  using InputError::InputError;
};

// A three-valued comparison stayed undecided at the precision cap (exit 2).
class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A checked mathematical invariant failed. This is a bug or a counterexample
// to a proven bound and must never happen in a passing run (exit 3).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace nearcurve
