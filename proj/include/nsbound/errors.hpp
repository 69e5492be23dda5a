#pragma once

#include <stdexcept>
#include <string>

namespace nsbound {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in Laurent rings of different rank, or matrix shapes disagree.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// An operation that needs a non-zero polynomial or matrix got zero.
class ZeroInput : public Error {
 public:
  using Error::Error;
};

/// Minor enumeration would visit more candidate index sets than allowed.
class SearchCapExceeded : public Error {
 public:
  using Error::Error;
};

/// Iterative numerical routine failed to reach its tolerance.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Not enough data to carry out a fit or estimate.
class InsufficientData : public Error {
 public:
  using Error::Error;
};

}  // namespace nsbound
