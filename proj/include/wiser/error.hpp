#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wiser {

enum class ErrorKind {
  UnknownElement,
  DuplicateElement,
  SpaceMismatch,
  SizeLimit,
  NotADistribution,
  NegativeValue,
  NotAPredicate,
  WeightsNotConvex,
  EmptyMultiset,
  EmptyEvidence,
  ZeroValidity,
  NonPositiveLog,
  SupportViolation,
  SupportMismatch,
  UnknownSuite,
  ParseError,
  IOFailure,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), message_(what) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// The text without the kind prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorKind kind_;
  std::string message_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(ErrorKind::ParseError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace wiser
