#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lando {

enum class ErrorCode {
  kEmptyInput,
  kCycle,
  kDisconnected,
  kSelfLoop,
  kParallelEdge,
  kDuplicateLabel,
  kInvalidLabel,
  kInvalidVertex,
  kInvalidEdge,
  kInvalidParameter,
  kSyntaxError,
  kEmptyTreeNeedsVertexLine,
  kMissingAssignment,
  kDuplicateAssignment,
  kUnknownLabel,
  kSizeMismatch,
  kInvalidBijection,
};

std::string_view to_string(ErrorCode code);

// All input and contract failures in the library are reported through this
// type. The message names the offending element.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lando
