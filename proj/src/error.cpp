#include "minkin/error.hpp"

namespace minkin {

const char* error_tag(ErrorCode code) {
  switch (code) {
    case ErrorCode::ReferencedEdgeMissing: return "REFERENCED_EDGE_MISSING";
    case ErrorCode::BadOrder: return "BAD_ORDER";
    case ErrorCode::NOutOfRange: return "N_OUT_OF_RANGE";
    case ErrorCode::WrongTripleCount: return "WRONG_TRIPLE_COUNT";
    case ErrorCode::NotSquare: return "NOT_SQUARE";
    case ErrorCode::NotDivisible: return "NOT_DIVISIBLE";
    case ErrorCode::BadIndex: return "BAD_INDEX";
    case ErrorCode::DegeneratePoint: return "DEGENERATE_POINT";
    case ErrorCode::BadBasisKeys: return "BAD_BASIS_KEYS";
    case ErrorCode::InconsistentConstraints: return "INCONSISTENT_CONSTRAINTS";
    case ErrorCode::SamplingExhausted: return "SAMPLING_EXHAUSTED";
    case ErrorCode::EdgeNotInTree: return "EDGE_NOT_IN_TREE";
    case ErrorCode::DegenerateS: return "DEGENERATE_S";
    case ErrorCode::NoConvergence: return "NO_CONVERGENCE";
    case ErrorCode::UnstableCount: return "UNSTABLE_COUNT";
    case ErrorCode::MixedVariables: return "MIXED_VARIABLES";
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::ParseError: return "PARSE_ERROR";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(error_tag(code)) + ": " + what), code_(code) {}

}  // namespace minkin
