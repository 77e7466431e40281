#pragma once

#include <stdexcept>
#include <string>

namespace nshift {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands built over different fields, platforms or group tables.
class SpecMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

// Bad construction parameters (non-prime characteristic, reducible modulus, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Malformed text encodings.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Something that the algebra guarantees cannot happen did happen.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace nshift
