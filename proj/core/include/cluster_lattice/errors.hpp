#pragma once

#include <stdexcept>
#include <string>

namespace cluster_lattice {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input: bad syntax, invalid partition, incompatible
// decoration, mismatched sizes, violated preconditions.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// An enumeration or materialization was asked to exceed its size guard.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// n < 2 is rejected outright; the one-limit-point model is not emulated.
class UnsupportedModel : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class SizeMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NoNonzeroMorphism : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotCrossing : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class PreconditionViolated : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class InvalidDecoration : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Broken internal invariant. Never expected; indicates a library bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace cluster_lattice
