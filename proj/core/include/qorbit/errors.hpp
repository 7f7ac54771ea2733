#pragma once

#include <stdexcept>

namespace qorbit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input (zero form, malformed root multiset, bad range).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// A float-mode decision fell inside its tolerance band (q close to zero,
/// nearly colliding roots). Raised instead of guessing.
class BoundaryUncertain : public Error {
 public:
  using Error::Error;
};

/// Point lies on the lightcone of Y^4 and has no Minkowski-patch coordinates.
class OutOfChart : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of a geometric function.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A computed orbit dimension or signature disagrees with the stratum table.
class InternalConsistency : public Error {
 public:
  using Error::Error;
};

/// Text that could not be parsed as a number, root or form.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace qorbit
