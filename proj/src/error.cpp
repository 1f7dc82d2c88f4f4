#include "mgdom/error.hpp"

namespace mgdom {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::IsolatedVertex: return "IsolatedVertex";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotTranscribed: return "NotTranscribed";
    case ErrorCode::ComplementDisconnected: return "ComplementDisconnected";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace mgdom
