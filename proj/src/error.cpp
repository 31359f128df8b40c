#include "qtrend/error.hpp"

namespace qtrend {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownRelationType: return "UnknownRelationType";
    case ErrorCode::DuplicateVariable: return "DuplicateVariable";
    case ErrorCode::SelfRelation: return "SelfRelation";
    case ErrorCode::UndeclaredVariable: return "UndeclaredVariable";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NoRectificationPossible: return "NoRectificationPossible";
    case ErrorCode::UnknownNode: return "UnknownNode";
    case ErrorCode::NeutralDesire: return "NeutralDesire";
    case ErrorCode::NoObjectives: return "NoObjectives";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::DiagonalNotUnit: return "DiagonalNotUnit";
    case ErrorCode::EntryOutOfRange: return "EntryOutOfRange";
  }
  return "Unknown";
}

namespace {

std::string format_message(const std::string& message, std::optional<std::size_t> line) {
  if (!line) return message;
  return "line " + std::to_string(*line) + ": " + message;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message, std::optional<std::size_t> line)
    : std::runtime_error(format_message(message, line)), code_(code), line_(line) {}

}  // namespace qtrend
