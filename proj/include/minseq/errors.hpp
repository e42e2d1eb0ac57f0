#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace minseq {

/// Base class for all errors raised by the workbench.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed formula/sequent/derivation text. `position` is a 0-based byte
/// offset into the input.
struct ParseError : Error {
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " (at offset " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

/// Derivation text names a rule that does not exist.
struct UnknownRuleError : ParseError {
  UnknownRuleError(const std::string& name, std::size_t position)
      : ParseError("unknown rule '" + name + "'", position), rule_name(name) {}
  std::string rule_name;
};

/// An assignment does not cover every variable of the evaluated formula.
struct MissingVariableError : Error {
  explicit MissingVariableError(const std::string& variable)
      : Error("assignment missing variable '" + variable + "'"),
        variable(variable) {}
  std::string variable;
};

/// Too many distinct variables for truth-table evaluation.
struct VariableLimitError : Error {
  using Error::Error;
};

/// Enumeration bounds exceed the configured guards.
struct BoundTooLargeError : Error {
  using Error::Error;
};

/// Operation requires a valid sequent.
struct NotValidError : Error {
  using Error::Error;
};

/// Operation requires a minimal sequent.
struct NotMinimalError : Error {
  using Error::Error;
};

/// Elaboration target cannot derive a rule used by the derivation.
struct NotContainedError : Error {
  using Error::Error;
};

}  // namespace minseq
