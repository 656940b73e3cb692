#pragma once

#include <stdexcept>
#include <string>

namespace lnz {

enum class ErrorCode {
  DimensionMismatch,
  NotNilpotent,
  NonNilpotent,
  SyntaxError,
  IndexError,
  DuplicateEntry,
  IndexOutOfRange,
  ElementInDerivedSubalgebra,
  DimensionTooSmall,
  ParityViolation,
  InadmissibleParams,
  UnknownFamily,
  SingularChange,
  RestrictionViolated,
  EpsilonMismatch,
  DivisionByZero,
  InvalidArgument,
  NotInCatalogForm,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. SyntaxError carries the 1-based
/// line/column of the offending input when known (0 otherwise).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, int line = 0, int column = 0);

  ErrorCode code() const noexcept { return code_; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  ErrorCode code_;
  int line_;
  int column_;
};

}  // namespace lnz
