#pragma once

#include <stdexcept>
#include <string>

namespace multisplit {

// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid configuration or argument values. The CLI maps this to a usage
// error (exit code 2).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Mismatched array/grid sizes between objects that must agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Zero or near-zero pivot during tridiagonal elimination.
class SingularSystemError : public Error {
 public:
  using Error::Error;
};

// Non-finite values detected in a wave field; the message names the step.
class BlowupError : public Error {
 public:
  using Error::Error;
};

// A run exceeded its cooperative wall-time budget (benchmark rows catch
// this and record a timed-out entry instead of aborting the suite).
class TimeBudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Convergence order undefined because an error value is zero or negative
// (below the floating-point floor).
class UndefinedOrderError : public Error {
 public:
  using Error::Error;
};

}  // namespace multisplit
