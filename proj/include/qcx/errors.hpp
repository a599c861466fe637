#pragma once

#include <stdexcept>
#include <string>

namespace qcx {

/// Base class for failures that carry a stable machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// Malformed user input: spec documents, compact notation, record files.
class SpecError : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition of a construction does not hold
/// (e.g. g does not divide x^n - 1, x^(1) is not in the dual).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Exhaustive enumeration would exceed the configured message budget.
/// `required` is the decimal message count that would have been needed.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& message, std::string required)
      : Error("budget-exceeded", message), required_(std::move(required)) {}

  const std::string& required() const noexcept { return required_; }

 private:
  std::string required_;
};

}  // namespace qcx
