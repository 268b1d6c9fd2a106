#pragma once

#include <stdexcept>
#include <string>

namespace lip {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument left the gray-level domain (-1, 1) in a non-recoverable way,
/// e.g. inverting the product zero.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An operation that needs at least one pixel received an empty image.
class EmptyImageError : public Error {
 public:
  using Error::Error;
};

/// The value spread is zero, so a two-point moment match is undefined.
class DegenerateSpreadError : public Error {
 public:
  using Error::Error;
};

/// Homothety problem with coincident bounds (u_low == u_high).
class DegenerateProblemError : public Error {
 public:
  using Error::Error;
};

/// Fixed-point iteration hit its iteration ceiling. Carries the last iterate
/// so callers can still apply a best-effort transform.
class NoConvergenceError : public Error {
 public:
  NoConvergenceError(const std::string& what, double lambda, int iterations,
                     double residual)
      : Error(what),
        lambda_(lambda),
        iterations_(iterations),
        residual_(residual) {}

  double lambda() const { return lambda_; }
  int iterations() const { return iterations_; }
  double residual() const { return residual_; }

 private:
  double lambda_;
  int iterations_;
  double residual_;
};

/// Base class for PGM codec failures.
class CodecError : public Error {
 public:
  using Error::Error;
};

class MalformedHeaderError : public CodecError {
 public:
  using CodecError::CodecError;
};

class UnsupportedMaxvalError : public CodecError {
 public:
  using CodecError::CodecError;
};

class TruncatedDataError : public CodecError {
 public:
  using CodecError::CodecError;
};

/// File open/read/write failure outside the codec itself.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace lip
