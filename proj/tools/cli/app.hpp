#pragma once

#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "soeinstein/error.hpp"
#include "soeinstein/ricci/metric.hpp"

namespace soe::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kVerificationFailed = 2, kDegenerate = 3 };

int exit_code_for(ErrorCode code);

// args excludes the program name. Everything is written to `out` unless
// --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

inline constexpr double kOracleTolerance = 1e-9;

// Uniform double in [0, 1) from the top 53 bits of one mt19937_64 draw.
double uniform01(std::mt19937_64& gen);

// Log-uniform parameters in [1/4, 4]; trial 0 is the bi-invariant metric.
ricci::MetricParams<double> oracle_metric(std::mt19937_64& gen, int trial);

}  // namespace soe::cli
