#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qtrend {

enum class ErrorCode {
  SyntaxError,
  UnknownRelationType,
  DuplicateVariable,
  SelfRelation,
  UndeclaredVariable,
  InvalidArgument,
  IndexOutOfRange,
  NoRectificationPossible,
  UnknownNode,
  NeutralDesire,
  NoObjectives,
  NotSquare,
  NotSymmetric,
  DiagonalNotUnit,
  EntryOutOfRange,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library. Parse errors carry the 1-based line.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> line = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> line_;
};

}  // namespace qtrend
