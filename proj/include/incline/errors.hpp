#pragma once

#include <stdexcept>
#include <string>

namespace incline {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An element does not belong to the carrier of the incline it is used with.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Matrix dimension or incline mismatch.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// A scalar argument is out of range (power 0, horizon < 2, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Malformed input documents (JSON, walk strings, element literals).
class InputError : public Error {
 public:
  using Error::Error;
};

// A finite table fails one of the incline axioms.
class InvalidInclineError : public Error {
 public:
  using Error::Error;
};

// A finite table whose multiplication is not commutative.
class NoncommutativeInclineError : public InvalidInclineError {
 public:
  using InvalidInclineError::InvalidInclineError;
};

}  // namespace incline
