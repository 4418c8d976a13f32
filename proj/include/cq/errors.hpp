#pragma once

#include <stdexcept>
#include <string>

namespace cq {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands have incompatible shapes, groups or algebras.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed input: bad spec files, unknown presets, out-of-range parameters.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A mathematical invariant failed at the configured tolerance.
/// `invariant()` names the check so callers can report it.
class ValidationError : public Error {
 public:
  ValidationError(std::string invariant, const std::string& detail)
      : Error(invariant + ": " + detail), invariant_(std::move(invariant)) {}

  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

/// Request exceeds the dense-computation budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace cq
