#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace osci {

/// Pipeline stage an error originated in. Carried by every osci::Error so
/// that the CLI can report where a computation failed.
enum class Stage {
  specfun,
  quadrature_rule,
  interpolation,
  starting_moments,
  recurrence,
  oracle,
  integration,
  sweep,
  parse,
  cli,
};

std::string_view to_string(Stage stage) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Stage stage, const std::string& what)
      : std::runtime_error(what), stage_(stage) {}

  Stage stage() const noexcept { return stage_; }

 private:
  Stage stage_;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A result would overflow, or is not representable as a finite double.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// The requested accuracy cannot be certified by the chosen method.
class AccuracyError : public Error {
 public:
  using Error::Error;
};

/// An iterative or adaptive procedure ran out of budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A linear system (banded recurrence rows, Hermite correction) was singular
/// or a recurrence pivot vanished.
class SingularError : public Error {
 public:
  using Error::Error;
};

}  // namespace osci
