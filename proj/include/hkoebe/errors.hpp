#pragma once

#include <stdexcept>
#include <string>

namespace hkoebe {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain of an operation (|z| >= 1, r out of range, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Series division by a series whose constant term vanishes.
class DivisionByNonUnit : public Error {
 public:
  using Error::Error;
};

/// Closed-form evaluation at its pole z = 1.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Dilatation or class parameters that the requested representation cannot hold.
class InvalidSpec : public Error {
 public:
  using Error::Error;
};

/// Conformal part handed to the shear without the f(0)=0, f'(0)=1 normalization.
class NormalizationError : public Error {
 public:
  using Error::Error;
};

/// NaN or Inf where a finite coefficient is required.
class NonFiniteValue : public Error {
 public:
  using Error::Error;
};

/// Malformed map, series or report input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace hkoebe
