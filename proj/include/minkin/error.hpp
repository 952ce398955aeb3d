#pragma once

#include <stdexcept>
#include <string>

namespace minkin {

enum class ErrorCode {
  ReferencedEdgeMissing,
  BadOrder,
  NOutOfRange,
  WrongTripleCount,
  NotSquare,
  NotDivisible,
  BadIndex,
  DegeneratePoint,
  BadBasisKeys,
  InconsistentConstraints,
  SamplingExhausted,
  EdgeNotInTree,
  DegenerateS,
  NoConvergence,
  UnstableCount,
  MixedVariables,
  DimensionMismatch,
  ParseError,
};

// Machine-readable tag, e.g. "REFERENCED_EDGE_MISSING".
const char* error_tag(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const { return code_; }
  const char* tag() const { return error_tag(code_); }

 private:
  ErrorCode code_;
};

}  // namespace minkin
