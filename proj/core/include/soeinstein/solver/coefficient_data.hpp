#pragma once

#include <filesystem>
#include <string>

#include "soeinstein/poly/sparse_poly.hpp"

namespace soe::solver {

// Published polynomials with coefficients that are polynomials in k and l
// (the last two variables of every entry). Read-only after loading.
struct CoefficientData {
  poly::SparsePoly<5> f1, f2, f3;   // x2 x3 x12 k l
  poly::SparsePoly<4> f2_cofactor;  // x2 x12 k l
  poly::SparsePoly<4> g1, g2;       // x3 x12 k l
  poly::SparsePoly<3> h;            // x12 k l
  poly::SparsePoly<4> hlin;         // x12 x3 k l
  poly::SparsePoly<3> p;            // x3 k l
  std::filesystem::path source;
};

inline constexpr const char* kDataDirEnv = "SOEINSTEIN_DATA_DIR";

// $SOEINSTEIN_DATA_DIR if set, otherwise the directory configured at build
// time, otherwise the installed share directory.
std::filesystem::path default_data_dir();

// Throws Error(data_error) for missing files or unexpected variable headers.
CoefficientData load_coefficient_data(const std::filesystem::path& dir);

// Loaded once from default_data_dir() on first use.
const CoefficientData& default_coefficient_data();

}  // namespace soe::solver
