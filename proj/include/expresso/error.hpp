#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace expresso {

enum class ErrorCode {
  kArityMismatch,
  kIndexOutOfRange,
  kInvalidRelation,
  kInvalidDatabase,
  kDegreeMismatch,
  kInvalidPermutation,
  kNotAGroup,
  kNotASubgroup,
  kElementOutOfRange,
  kGroundMismatch,
  kInvalidPartition,
  kUniverseMismatch,
  kDomainMismatch,
  kNotWeaklyConnected,
  kEmptyInstance,
  kNotSubdomain,
  kEmptySelection,
  kNotInImage,
  kNotInSet,
  kNotDisjoint,
  kDatabaseMismatch,
  kParseError,
  kResourceLimit,
  // Raised when a mathematical guarantee is observed to fail (a non-integral
  // index, a missing maximum, disagreeing criteria). Always a bug.
  kInternal,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(ErrorCode::kParseError, "line " + std::to_string(line) +
                                          ", column " + std::to_string(column) +
                                          ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace expresso
