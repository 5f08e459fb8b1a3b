#pragma once

#include <stdexcept>
#include <string>

namespace plrot {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two operands live in different quadratic fields.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// An argument lies outside the domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A named mathematical precondition failed, e.g. "sf <= sg".
class PreconditionError : public Error {
 public:
  PreconditionError(std::string condition, const std::string& what)
      : Error(what), condition_(std::move(condition)) {}

  const std::string& condition() const noexcept { return condition_; }

 private:
  std::string condition_;
};

/// A configured resource bound (factorization bound, node budget) was hit.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace plrot
