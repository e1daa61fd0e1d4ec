#pragma once

#include <stdexcept>
#include <string>

namespace gammaratio {

/// Base class for every error the library raises. Each subclass carries a
/// short machine-readable code that the CLI prints as a line prefix.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* code() const noexcept = 0;
};

/// Argument outside the mathematical domain (x <= 0, non-finite, a >= b, ...).
class DomainError : public Error {
 public:
  using Error::Error;
  const char* code() const noexcept override { return "E_DOMAIN"; }
};

/// Sample or vector too short for the requested operation.
class SizeError : public Error {
 public:
  using Error::Error;
  const char* code() const noexcept override { return "E_SIZE"; }
};

/// Malformed input data (bad number, non-positive value, missing column).
class DataError : public Error {
 public:
  using Error::Error;
  const char* code() const noexcept override { return "E_DATA"; }
};

/// Numerical procedure failed (quadrature did not converge, rejection
/// sampler exhausted its iteration budget, ...).
class NumericError : public Error {
 public:
  using Error::Error;
  const char* code() const noexcept override { return "E_NUMERIC"; }
};

class IoError : public Error {
 public:
  using Error::Error;
  const char* code() const noexcept override { return "E_IO"; }
};

class UsageError : public Error {
 public:
  using Error::Error;
  const char* code() const noexcept override { return "E_USAGE"; }
};

}  // namespace gammaratio
