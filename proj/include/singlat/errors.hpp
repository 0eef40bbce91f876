#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace singlat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: DSL syntax, dangling edges, unknown ids, loops.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(what) {}
  InputError(const std::string& what, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_ = 0;
  std::size_t column_ = 0;
};

/// A value outside the domain of an operation, e.g. a cycle not in L'.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The input is well formed but an operation's hypothesis does not hold
/// (not negative definite, not rational, |C| != E, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed. Always a bug, never a user error.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace singlat
