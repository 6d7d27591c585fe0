#include "soeinstein/error.hpp"

namespace soe {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid argument";
    case ErrorCode::out_of_range: return "out of supported range";
    case ErrorCode::zero_divisor: return "zero divisor";
    case ErrorCode::not_squarefree: return "not squarefree";
    case ErrorCode::nothing_to_eliminate: return "nothing to eliminate";
    case ErrorCode::degenerate_metric: return "degenerate metric";
    case ErrorCode::factorization_mismatch: return "factorization mismatch";
    case ErrorCode::derivation_mismatch: return "derivation mismatch";
    case ErrorCode::transcription_mismatch: return "transcription or theory mismatch";
    case ErrorCode::elimination_mismatch: return "elimination mismatch";
    case ErrorCode::shared_factor: return "g1, g2 share a factor";
    case ErrorCode::no_consistent_x3: return "no consistent x3";
    case ErrorCode::theorem_check_failed: return "theorem check failed";
    case ErrorCode::count_check_failed: return "count check failed";
    case ErrorCode::data_error: return "data error";
  }
  return "unknown error";
}

}  // namespace soe
