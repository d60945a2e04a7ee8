#pragma once

#include <stdexcept>
#include <string>

namespace cdent {

// Base of every error raised by the library. The CLI maps the subclasses
// onto exit codes, so new failure modes should derive from one of them.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A state (or state file) that does not describe a valid hybrid state:
// dimension mismatches, wrong coefficient counts, nonpositive widths.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Numerical precondition not met, e.g. an unnormalized state.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class DegenerateStateError : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace cdent
