#pragma once

#include <stdexcept>
#include <string>

namespace qg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not match what an operation requires.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A finite group table violates a group axiom, or a build request is invalid.
class GroupError : public Error {
 public:
  using Error::Error;
};

/// A document is malformed or a file cannot be read or written.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// A structural identity that must hold by construction failed. The residual
/// is carried so callers can report how far off it was.
class IdentityError : public Error {
 public:
  IdentityError(const std::string& what, double residual)
      : Error(what + " (residual " + std::to_string(residual) + ")"), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace qg
