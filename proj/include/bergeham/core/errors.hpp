#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bergeham {

// Caller violated an operation's stated precondition (parameter ranges, n bounds, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Vertex id outside 0..n-1.
class DomainError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Parameters are in range but the requested object does not exist.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A path rotation was requested whose incidence conditions do not hold.
class RotationInapplicable : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line_(line),
        column_(column),
        detail_(what) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

}  // namespace bergeham
