#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace filicheck {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class NotNilpotent : public Error {
 public:
  using Error::Error;
};

class OddDimension : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold for the given input.
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

/// Syntax or range error in the algebra text format.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class AntisymmetryConflict : public ParseError {
 public:
  using ParseError::ParseError;
};

/// The parsed tensor is antisymmetric but violates the Jacobi identity.
class JacobiFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace filicheck
