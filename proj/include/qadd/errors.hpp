#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qadd {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An argument outside an operation's domain (negative q-integer index,
/// negative power exponent, non-constant coefficient expression, ...).
struct DomainError : Error {
  using Error::Error;
};

/// An index argument violated a positivity requirement of a rule or search.
struct PreconditionViolated : Error {
  using Error::Error;
};

struct DivisionByZero : Error {
  using Error::Error;
};

/// exact_div was asked for a quotient that leaves a remainder.
struct NonZeroRemainder : Error {
  using Error::Error;
};

/// Expression parse failure. offset() is the byte position of the first
/// unparseable token; expected() lists the token classes that were legal there.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string& message)
      : Error(message), offset_(offset), expected_(std::move(expected)) {}

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// A literal exponent that can never evaluate to a non-negative integer,
/// e.g. `q^-1`. Rejected at parse time.
class NegativeLiteralExponent : public SyntaxError {
 public:
  using SyntaxError::SyntaxError;
};

/// An index variable was referenced but not bound at evaluation time.
struct UnboundVariable : Error {
  using Error::Error;
};

/// An index form evaluated below zero where a non-negative value is required.
struct NegativeIndex : Error {
  using Error::Error;
};

/// A scalar constant that must be nonzero was zero.
struct ZeroConstant : Error {
  using Error::Error;
};

/// The two boundary sequences of a zero-identity spec disagree at index 1.
struct InitialMismatch : Error {
  using Error::Error;
};

}  // namespace qadd
