#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kspace {

// Every failure raised by the library derives from Error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownName : public Error {
 public:
  explicit UnknownName(const std::string& name)
      : Error("unknown catalog name '" + name + "'") {}
};

class InvalidTree : public Error {
 public:
  using Error::Error;
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

class NonConcreteAction : public Error {
 public:
  using Error::Error;
};

class IndexTooLarge : public Error {
 public:
  using Error::Error;
};

class NotFiniteOrder : public Error {
 public:
  using Error::Error;
};

class LimitExceeded : public Error {
 public:
  using Error::Error;
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, std::size_t line, std::size_t column,
              const std::string& expected)
      : Error("syntax error at " + std::to_string(line) + ":" +
              std::to_string(column) + ": expected " + expected),
        offset_(offset),
        line_(line),
        column_(column),
        expected_(expected) {}

  std::size_t offset() const { return offset_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::size_t line_;
  std::size_t column_;
  std::string expected_;
};

// Parsed correctly but the tree violates a structural invariant.
class SemanticError : public Error {
 public:
  using Error::Error;
};

}  // namespace kspace
