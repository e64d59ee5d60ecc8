#pragma once

#include <stdexcept>
#include <string>

namespace bssbp {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input: bad dimensions, unparsable text, violated type invariants.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

class DivisionByZeroError : public Error {
 public:
  explicit DivisionByZeroError(const std::string& what) : Error(what) {}
};

// Arithmetic between two irrational scalars with different radicands.
class RadicandMismatchError : public Error {
 public:
  explicit RadicandMismatchError(const std::string& what) : Error(what) {}
};

class NegativeRadicandError : public Error {
 public:
  explicit NegativeRadicandError(const std::string& what) : Error(what) {}
};

// Root isolation requires both interval endpoints to be non-roots.
class EndpointIsRootError : public Error {
 public:
  explicit EndpointIsRootError(const std::string& what) : Error(what) {}
};

// The constraint set is empty at the requested radius.
class InfeasibleError : public Error {
 public:
  explicit InfeasibleError(const std::string& what) : Error(what) {}
};

// A step, iteration, or enumeration budget was exhausted.
class BudgetExceededError : public Error {
 public:
  explicit BudgetExceededError(const std::string& what) : Error(what) {}
};

// A register program failed structural validation.
class InvalidProgramError : public Error {
 public:
  explicit InvalidProgramError(const std::string& what) : Error(what) {}
};

// A decision run produced something other than a single 0/1 cell.
class NonBooleanOutputError : public Error {
 public:
  explicit NonBooleanOutputError(const std::string& what) : Error(what) {}
};

// Incompatible layer dimensions when assembling a network.
class ShapeMismatchError : public Error {
 public:
  explicit ShapeMismatchError(const std::string& what) : Error(what) {}
};

// The noise level must lie strictly between 0 and 1 for the gap family.
class EpsilonOutOfRangeError : public Error {
 public:
  explicit EpsilonOutOfRangeError(const std::string& what) : Error(what) {}
};

}  // namespace bssbp
