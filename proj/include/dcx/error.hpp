#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dcx {

/// Malformed input text. Carries a 1-based line and column.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Input parsed but violates a mathematical precondition
/// (d^2 != 0, Jacobi failure, non-solvable algebra, bad flag set, ...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes of spaces and matrices do not fit together.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent computations disagree, or a postcondition that the
/// mathematics guarantees has failed. Always an engine bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

}  // namespace dcx
