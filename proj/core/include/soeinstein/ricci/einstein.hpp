#pragma once

#include <array>
#include <string>
#include <string_view>

#include "soeinstein/lie/group_spec.hpp"
#include "soeinstein/ricci/metric.hpp"

namespace soe::ricci {

struct EinsteinResidual {
  double lambda = 0.0;
  double residual = 0.0;
  bool zero_lambda = false;  // residual then falls back to max |r_i|
};

// lambda is the d_i-weighted mean of the components (scalar curvature over
// dimension); residual = max_i |r_i - lambda| / |lambda|.
EinsteinResidual einstein_residual(const RicciComponents<double>& rc, const std::array<int, 6>& weights);
EinsteinResidual einstein_residual(const RicciComponents<double>& rc, const lie::GroupSpec& spec);

enum class ReductiveCase { case1, case2, case3, case4, none };
std::string_view to_string(ReductiveCase c);

struct ReductivityVerdict {
  ReductiveCase case_matched = ReductiveCase::none;
  double witness_tolerance = 0.0;

  bool naturally_reductive() const { return case_matched != ReductiveCase::none; }
};

inline constexpr double kDefaultReductiveTolerance = 1e-8;

// Tests the four parameter patterns admitting a naturally reductive
// structure, in order, on parameters normalized by x13:
//   1: x1 = x2 = x12, x13 = x23     2: x2 = x3 = x23, x12 = x13
//   3: x1 = x3 = x13, x12 = x23     4: x12 = x13 = x23
// Equality means |a - b| <= tol * max(|a|, |b|).
ReductivityVerdict classify_reductive(const MetricParams<double>& x, double tol = kDefaultReductiveTolerance);

}  // namespace soe::ricci
