#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mgdom {

enum class ErrorCode {
  LoopEdge,
  IndexOutOfRange,
  DuplicateEdge,
  BadParameter,
  Infeasible,
  UnknownLabel,
  IsolatedVertex,
  BudgetExhausted,
  TooLarge,
  NotTranscribed,
  ComplementDisconnected,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. `line()` is the 1-based input line
/// for parse-time errors and 0 otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, std::size_t line = 0)
      : std::runtime_error(what), code_(code), line_(line) {}

  ErrorCode code() const noexcept { return code_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  std::size_t line_;
};

}  // namespace mgdom
