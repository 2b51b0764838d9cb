#pragma once

#include <stdexcept>
#include <string>

namespace grm {

/// Base class for all failures raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Inversion of an element that is a zero divisor.
class NonUnitError : public Error {
 public:
  using Error::Error;
};

/// Polynomial division by a divisor whose leading coefficient is not a unit.
class NonMonicDivisorError : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomialError : public Error {
 public:
  using Error::Error;
};

class NonUnitLeadingError : public Error {
 public:
  using Error::Error;
};

/// Requested parameters exceed the exact-arithmetic size guards.
class ParamsTooLargeError : public Error {
 public:
  using Error::Error;
};

class InvalidParamsError : public Error {
 public:
  using Error::Error;
};

/// Internal search failure; indicates a bug, not a usage error.
class NoPrimitivePolynomialError : public Error {
 public:
  using Error::Error;
};

class LengthMismatchError : public Error {
 public:
  using Error::Error;
};

/// Raised when a rank is requested for a row module that is not free.
class NotFreeError : public Error {
 public:
  using Error::Error;
};

class NotInvertibleError : public Error {
 public:
  using Error::Error;
};

class OrderOutOfRangeError : public Error {
 public:
  using Error::Error;
};

class OutOfRangeError : public Error {
 public:
  using Error::Error;
};

/// A theorem hypothesis (typically rm >= s) does not hold for these parameters.
class PreconditionViolatedError : public Error {
 public:
  using Error::Error;
};

class EnumerationTooLargeError : public Error {
 public:
  using Error::Error;
};

/// An element expected to lie in the base ring has higher-degree coordinates.
/// Signals an internal arithmetic bug.
class CoefficientNotInBaseError : public Error {
 public:
  using Error::Error;
};

}  // namespace grm
