#pragma once

#include <stdexcept>
#include <string>

namespace hypercut {

// Every library failure mode gets a stable code so callers (and tests) can
// react to the condition instead of string-matching what() text.
enum class ErrorCode {
  VertexOutOfRange,
  SingletonHyperedge,
  DuplicateHyperedge,
  EmptySide,
  InvalidSide,
  VertexNotInSet,
  NotNested,
  OverlappingBlocks,
  EmptyBlock,
  TooSmall,
  TooLarge,
  NoSplit,
  BadK,
  BadPhi,
  BadS,
  ParseError,
  InvalidDirectedCut,
  InvalidSeparator,
  Unbounded,
  NoCutFound,
  Infeasible,
  OddN,
  NotSquare,
  BadParams,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace hypercut
