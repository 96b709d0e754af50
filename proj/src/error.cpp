#include "lando/error.hpp"

namespace lando {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kCycle: return "Cycle";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kParallelEdge: return "ParallelEdge";
    case ErrorCode::kDuplicateLabel: return "DuplicateLabel";
    case ErrorCode::kInvalidLabel: return "InvalidLabel";
    case ErrorCode::kInvalidVertex: return "InvalidVertex";
    case ErrorCode::kInvalidEdge: return "InvalidEdge";
    case ErrorCode::kInvalidParameter: return "InvalidParameter";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kEmptyTreeNeedsVertexLine: return "EmptyTreeNeedsVertexLine";
    case ErrorCode::kMissingAssignment: return "MissingAssignment";
    case ErrorCode::kDuplicateAssignment: return "DuplicateAssignment";
    case ErrorCode::kUnknownLabel: return "UnknownLabel";
    case ErrorCode::kSizeMismatch: return "SizeMismatch";
    case ErrorCode::kInvalidBijection: return "InvalidBijection";
  }
  return "Unknown";
}

}  // namespace lando
