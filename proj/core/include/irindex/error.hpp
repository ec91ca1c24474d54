#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace irindex {

enum class ErrorKind {
  DimensionMismatch,
  ExponentTooLarge,
  InvalidArgument,
  InfiniteColength,
  UnitIdeal,
  InvalidCandidates,
  NotInStaircase,
  EmptyStaircase,
  TooLarge,
  TrivialGroup,
  DivisionByZeroPoly,
  DegreeTooLarge,
  FieldTooLarge,
  UnitInput,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Base exception for every failure raised by the library. The kind is
/// what callers (the CLI in particular) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

  /// True for kinds produced by the desk-scale caps rather than by bad input.
  bool is_size_cap() const noexcept;

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace irindex
