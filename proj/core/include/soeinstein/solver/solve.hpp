#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "soeinstein/poly/roots.hpp"
#include "soeinstein/ricci/einstein.hpp"
#include "soeinstein/ricci/metric.hpp"
#include "soeinstein/solver/coefficient_data.hpp"

namespace soe::solver {

enum class Branch { below_one, above_one, at_one };
std::string_view to_string(Branch b);

struct EinsteinSolution {
  int k = 0;
  int l = 0;
  // Normalized so that x13 = x23 = 1; x1 = x2.
  ricci::MetricParams<double> metric;
  poly::RefinedRoot x12_root;
  poly::RefinedRoot x3_root;
  poly::RefinedRoot x2_root;
  Branch branch = Branch::below_one;
  double lambda = 0.0;
  double residual = 0.0;
  ricci::ReductivityVerdict reductivity;
  // |R(x12)| and |h(x12)| relative to their largest coefficient.
  double resultant_value = 0.0;
  double h_value = 0.0;
  std::optional<int> multiplicity;  // set when the root of h is not simple
};

struct RejectedRoot {
  double x12 = 0.0;
  std::string reason;
};

struct SolveOptions {
  double tol = 1e-10;             // relative Einstein residual
  double refine_rel_tol = 1e-12;  // certified relative width of x12
  double reductive_tol = ricci::kDefaultReductiveTolerance;
  bool use_linear_relation = true;  // x3 from hlin; otherwise from g2, g1
  // Throw Error(theorem_check_failed) when l > k >= 3 and the two branches
  // are not both certified.
  bool enforce_guarantee = true;
};

struct SolveResult {
  int k = 0;
  int l = 0;
  std::vector<EinsteinSolution> solutions;  // sorted by x12
  std::vector<RejectedRoot> rejected;
  bool guarantee_applies = false;  // l > k >= 3
  bool guarantee_met = false;      // >= 2 solutions, one on each side of 1

  int count(Branch b) const;
};

// Throws Error(out_of_range) unless k >= 3 and l >= 2.
SolveResult solve(int k, int l, const SolveOptions& opts = {},
                  const CoefficientData& data = default_coefficient_data());

// Rescales a solution so that the Einstein constant is 1 (Ricci components
// scale by 1/c when the metric scales by c).
ricci::MetricParams<double> normalize_to_unit_lambda(const EinsteinSolution& s);

}  // namespace soe::solver
