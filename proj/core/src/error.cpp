#include "irindex/error.hpp"

#include <fmt/format.h>

namespace irindex {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ExponentTooLarge: return "ExponentTooLarge";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InfiniteColength: return "InfiniteColength";
    case ErrorKind::UnitIdeal: return "UnitIdeal";
    case ErrorKind::InvalidCandidates: return "InvalidCandidates";
    case ErrorKind::NotInStaircase: return "NotInStaircase";
    case ErrorKind::EmptyStaircase: return "EmptyStaircase";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::TrivialGroup: return "TrivialGroup";
    case ErrorKind::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorKind::FieldTooLarge: return "FieldTooLarge";
    case ErrorKind::UnitInput: return "UnitInput";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(fmt::format("{}: {}", to_string(kind), what)), kind_(kind) {}

bool Error::is_size_cap() const noexcept {
  return kind_ == ErrorKind::TooLarge || kind_ == ErrorKind::DegreeTooLarge ||
         kind_ == ErrorKind::FieldTooLarge || kind_ == ErrorKind::ExponentTooLarge;
}

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : Error(ErrorKind::ParseError, fmt::format("line {}, column {}: {}", line, column, message)),
      message_(message),
      line_(line),
      column_(column) {}

}  // namespace irindex
