#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace scor {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input shape or configuration; the CLI maps these to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Arithmetic failure on otherwise valid input; the CLI maps these to exit code 3.
class NumericError : public Error {
 public:
  using Error::Error;
};

class ZeroVector : public NumericError {
 public:
  ZeroVector() : NumericError("vector has zero norm") {}
};

class NonFinite : public NumericError {
 public:
  using NumericError::NumericError;
};

class NonFiniteObjective : public NumericError {
 public:
  using NumericError::NumericError;
};

class DegenerateScores : public NumericError {
 public:
  using NumericError::NumericError;
};

class InfeasiblePoint : public NumericError {
 public:
  using NumericError::NumericError;
};

class DimensionMismatch : public UsageError {
 public:
  DimensionMismatch(std::size_t expected, std::size_t actual)
      : UsageError("dimension mismatch: expected " + std::to_string(expected) + ", got " +
                   std::to_string(actual)) {}
};

class InvalidConfig : public UsageError {
 public:
  using UsageError::UsageError;
};

class InvalidSpec : public UsageError {
 public:
  using UsageError::UsageError;
};

class EmptyClass : public UsageError {
 public:
  using UsageError::UsageError;
};

class ClassGap : public UsageError {
 public:
  using UsageError::UsageError;
};

class ParseError : public UsageError {
 public:
  ParseError(const std::string& what, std::size_t row, std::size_t column)
      : UsageError(what + " (row " + std::to_string(row) + ", column " + std::to_string(column) +
                   ")"),
        row_(row),
        column_(column) {}

  std::size_t row() const noexcept { return row_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t row_;
  std::size_t column_;
};

}  // namespace scor
