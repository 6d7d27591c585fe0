#pragma once

#include <string>

#include "json.hpp"
#include "soeinstein/solver/solve.hpp"

namespace soe::cli {

// One certified solution as printed by the CLI. Interval endpoints are exact
// rationals ("n" or "n/d").
struct SolutionRecord {
  int k = 0;
  int l = 0;
  double x1 = 0, x2 = 0, x3 = 0, x12 = 0, x13 = 0, x23 = 0;
  double lambda = 0;
  double residual = 0;
  std::string branch;
  bool naturally_reductive = false;
  std::string x12_lo, x12_hi;
  std::string x3_lo, x3_hi;
  std::string x2_lo, x2_hi;

  friend bool operator==(const SolutionRecord&, const SolutionRecord&) = default;
};

// With normalize set the metric is rescaled to lambda = 1 and the certified
// intervals refer to the x13 = x23 = 1 normalization.
SolutionRecord make_record(const solver::EinsteinSolution& s, bool normalize);

void to_json(nlohmann::json& j, const SolutionRecord& r);
void from_json(const nlohmann::json& j, SolutionRecord& r);

}  // namespace soe::cli
