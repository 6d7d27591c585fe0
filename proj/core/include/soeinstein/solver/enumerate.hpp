#pragma once

#include <vector>

#include "soeinstein/solver/coefficient_data.hpp"
#include "soeinstein/solver/solve.hpp"

namespace soe::solver {

struct PerK {
  int k = 0;
  int l = 0;
  int certified = 0;
  int below_one = 0;
  int above_one = 0;
};

struct EnumerationReport {
  int n = 0;
  std::vector<PerK> per_k;
  std::vector<EinsteinSolution> solutions;  // sorted by (k, l, branch)
  int total = 0;
  int bound = 0;  // 2 (floor((n-1)/3) - 2)
  bool met = false;
};

int count_bound(int n);

struct EnumerateOptions {
  SolveOptions solve;
  unsigned workers = 1;
  // Throw Error(count_check_failed) when the bound is not met.
  bool enforce_bound = true;
};

// SO(n) with blocks (k, k, n - 2k) for 3 <= k <= floor((n-1)/3). Throws
// Error(out_of_range) for n < 10.
EnumerationReport enumerate(int n, const EnumerateOptions& opts = {},
                            const CoefficientData& data = default_coefficient_data());

}  // namespace soe::solver
