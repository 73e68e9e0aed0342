#pragma once

#include <stdexcept>
#include <string>

namespace relmark {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial, term or ideal text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Raised by operations that require a quasi-stable monomial ideal.
class NotQuasiStable : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A configured resource cap (pairs, steps, coefficient size) was hit.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace relmark
