#pragma once

#include <stdexcept>

namespace cabform {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact division was requested but the divisor does not divide the dividend.
struct NotDivisibleError : Error {
  using Error::Error;
};

/// reduceMonic was given a modulus that is not monic in the reduction variable.
struct NotMonicError : Error {
  using Error::Error;
};

struct NotCoprimeError : Error {
  using Error::Error;
};

struct IndexOutOfRangeError : Error {
  using Error::Error;
};

struct InvalidCurveError : Error {
  using Error::Error;
};

struct FamilyMismatchError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace cabform
