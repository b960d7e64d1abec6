#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arkimex {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed coefficient or configuration text. Carries the 1-based line and
/// the field path (e.g. `methods[3].explicit.A[2][1]`) when known.
class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t line, std::string field);

  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

/// A tableau or method record violates a structural invariant.
class InvariantError : public Error {
 public:
  InvariantError(const std::string& method, const std::string& check);

  const std::string& method() const noexcept { return method_; }
  const std::string& check() const noexcept { return check_; }

 private:
  std::string method_;
  std::string check_;
};

class UnknownMethodError : public Error {
 public:
  explicit UnknownMethodError(const std::string& name);
};

/// Invalid run configuration (missing file, bad key, out-of-range value).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Numerical failure during integration.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Exact zero pivot in a tridiagonal factorization.
class SingularMatrixError : public NumericalError {
 public:
  SingularMatrixError(std::size_t block, std::size_t pivot);

  std::size_t block() const noexcept { return block_; }
  std::size_t pivot() const noexcept { return pivot_; }

 private:
  std::size_t block_;
  std::size_t pivot_;
};

/// Newton iteration hit its iteration cap or produced a non-finite increment.
class NewtonFailure : public NumericalError {
 public:
  NewtonFailure(int iterations, double last_increment_norm);

  int iterations() const noexcept { return iterations_; }
  double last_increment_norm() const noexcept { return last_increment_norm_; }

 private:
  int iterations_;
  double last_increment_norm_;
};

}  // namespace arkimex
