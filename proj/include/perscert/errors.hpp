#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "perscert/rational.hpp"

namespace perscert {

// Base of every error raised by the library. The CLI maps subclasses onto
// distinct exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Grades of different arity were combined.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A pair of grades or shifts violated a required r <= s.
class OrderError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Objects that must agree (middle object of a composite, source of a cert)
// do not.
class MismatchError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// The requested category or parameter count is not implemented.
class UnsupportedError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Malformed input document.
class SchemaError : public Error {
 public:
  using Error::Error;
};

// An exhaustive search ran out of budget. Carries the best certified upper
// bound found before giving up, when there is one.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::optional<Rational> best_upper_bound = std::nullopt)
      : Error(what), best_upper_bound_(std::move(best_upper_bound)) {}

  const std::optional<Rational>& best_upper_bound() const { return best_upper_bound_; }

 private:
  std::optional<Rational> best_upper_bound_;
};

}  // namespace perscert
