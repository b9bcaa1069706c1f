#pragma once

#include <stdexcept>
#include <string>

namespace ssarr {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-supplied value violates a documented precondition.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Division by zero or operands living in different fields.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

/// An invariant that the mathematics guarantees did not hold. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace ssarr
