#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace syntaft {

enum class ErrorCode {
  DimensionMismatch,
  UnknownSymbol,
  AlphabetMismatch,
  InvalidRepresentation,
  InvalidAlgebra,
  ZeroFunctional,
  NotSemisimple,
  NotSplitOverQ,
  NonSquareBlock,
  InvalidGroup,
  UnknownCatalogEntry,
  ParameterTooLarge,
  BudgetExceeded,
  InvalidLanguage,
  IncompleteAutomaton,
  NotClosed,
  NotOriented,
  NotConnected,
  InvalidMoveSite,
  DegenerateForm,
  NotCommutative,
  SyntaxError,
  UnassignedVariable,
  NotRestricted,
  ParseError,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by text readers (rationals, file formats, formulas). Line and
/// column are 1-based; 0 means "unknown".
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t line, std::size_t column,
             const std::string& what)
      : Error(code, locate(line, column) + what), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string locate(std::size_t line, std::size_t column) {
    if (line == 0) return {};
    return std::to_string(line) + ":" + std::to_string(column) + ": ";
  }

  std::size_t line_;
  std::size_t column_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace syntaft
