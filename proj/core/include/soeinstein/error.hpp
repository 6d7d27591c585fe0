#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace soe {

enum class ErrorCode {
  invalid_argument,
  out_of_range,
  zero_divisor,
  not_squarefree,
  nothing_to_eliminate,
  degenerate_metric,
  factorization_mismatch,
  derivation_mismatch,
  transcription_mismatch,
  elimination_mismatch,
  shared_factor,
  no_consistent_x3,
  theorem_check_failed,
  count_check_failed,
  data_error,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library; the code lets front ends map
// failures onto exit statuses without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace soe
