#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ringrank {

/// Base class for every error reported by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arithmetic outside the domain of an operation (e.g. inverting zero).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Operands with incompatible shapes or ambient spaces.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Elements drawn from different algebras, or algebras over different fields.
class AlgebraMismatch : public Error {
 public:
  using Error::Error;
};

/// Field parameters that do not describe a finite field.
class InvalidField : public Error {
 public:
  using Error::Error;
};

/// Structure constants that fail associativity or the unit law.
class InvalidAlgebra : public Error {
 public:
  using Error::Error;
};

/// An exhaustive scan would exceed its configured budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::string what, std::uint64_t required, std::uint64_t limit)
      : Error(what + ": requires " + std::to_string(required) +
              " scan steps, budget is " + std::to_string(limit)),
        required_(required),
        limit_(limit) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t required_;
  std::uint64_t limit_;
};

/// A computed witness failed re-verification. Indicates a library bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace ringrank
