#pragma once

#include <stdexcept>
#include <string>

namespace susyzeta {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the region where the requested representation is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed configuration or value type (non-finite input, bad bounds, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// |1 - 2^{1-s}| fell below the singularity guard on the line Re s = 1.
class PrefactorSingular : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The series error bound cannot be met within the configured term budget.
class NonConvergent : public Error {
 public:
  using Error::Error;
};

class ToleranceExceeded : public Error {
 public:
  ToleranceExceeded(const std::string& what, int level) : Error(what), level_(level) {}
  int level() const noexcept { return level_; }

 private:
  int level_;
};

class NoInteriorMinimum : public Error {
 public:
  using Error::Error;
};

class CutoffTooSmall : public Error {
 public:
  using Error::Error;
};

}  // namespace susyzeta
