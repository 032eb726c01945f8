#pragma once

#include <stdexcept>
#include <string>

namespace ybe {

// Base of every error raised by the library. Callers that only care about
// "the analysis refused" can catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input violates an operation's precondition (not a solution, degenerate, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Malformed table, permutation or document.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// The requested enumeration exceeds the configured strategy budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Exact arithmetic: inverse of zero.
class DivisionByZero : public Error {
 public:
  using Error::Error;
};

// The induced map on retraction classes depends on the chosen representatives.
// `left_class`/`right_class` are 0-based class indices of the witness pair,
// `level` the tower level at which it was detected.
class IllDefinedRetraction : public Error {
 public:
  IllDefinedRetraction(int left_class, int right_class, int level = 0);

  int left_class() const { return left_class_; }
  int right_class() const { return right_class_; }
  int level() const { return level_; }

 private:
  int left_class_;
  int right_class_;
  int level_;
};

class NotCommuting : public Error {
 public:
  using Error::Error;
};

class IncompleteSplit : public Error {
 public:
  using Error::Error;
};

class RetractionNotTrivial : public Error {
 public:
  using Error::Error;
};

}  // namespace ybe
