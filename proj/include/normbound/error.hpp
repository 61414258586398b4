#pragma once

#include <stdexcept>
#include <string>

namespace normbound {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class EmptyGenerators : public Error {
 public:
  EmptyGenerators() : Error("generator list is empty") {}
};

/// Raised by analysis entry points when the ideal is the whole ring.
class UnitIdeal : public Error {
 public:
  UnitIdeal() : Error("the unit ideal is not a valid input") {}
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Length of R/I is infinite: the ideal is not primary to the maximal ideal.
class NotPrimary : public Error {
 public:
  NotPrimary() : Error("ideal is not primary to the maximal ideal (height < d)") {}
};

class DimensionCap : public Error {
 public:
  DimensionCap(int d, int cap)
      : Error("dimension " + std::to_string(d) + " exceeds the configured cap " +
              std::to_string(cap)) {}
};

/// The sampled Hilbert function did not settle into a polynomial within the
/// sampling budget.
class NotStabilized : public Error {
 public:
  NotStabilized(int budget, std::string detail)
      : Error("Hilbert function not stabilized within " + std::to_string(budget) +
              " samples: " + detail),
        budget_(budget) {}
  int budget() const { return budget_; }

 private:
  int budget_;
};

class NotAReduction : public Error {
 public:
  using Error::Error;
};

class NotEquimultiple : public Error {
 public:
  NotEquimultiple() : Error("ideal is not equimultiple (analytic spread != height)") {}
};

/// An internal consistency check failed. Always a bug or a counterexample.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class Overflow : public Error {
 public:
  Overflow() : Error("64-bit exponent arithmetic overflowed") {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace normbound
