#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hermite {

// Operands live in different ambient rings (variable count or order differs).
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Rejected system text. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        message_(message),
        line_(line),
        column_(column) {}

  const std::string& message() const noexcept { return message_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

class NotZeroDimensional : public std::domain_error {
 public:
  NotZeroDimensional() : std::domain_error("the ideal is not zero-dimensional") {}
  explicit NotZeroDimensional(const std::string& what) : std::domain_error(what) {}
};

class AsymmetricMatrix : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A normal form has support outside the quotient basis it is expressed in.
class BasisMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Two independent computations that must agree did not.
class OracleMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hermite
