#include "soeinstein/solver/coefficient_data.hpp"

#include <cstdlib>
#include <fstream>
#include <mutex>

#include "soeinstein/error.hpp"
#include "soeinstein/poly/text_format.hpp"

#ifndef SOEINSTEIN_DEFAULT_DATA_DIR
#define SOEINSTEIN_DEFAULT_DATA_DIR ""
#endif
#ifndef SOEINSTEIN_INSTALL_DATA_DIR
#define SOEINSTEIN_INSTALL_DATA_DIR ""
#endif

namespace soe::solver {

namespace fs = std::filesystem;
using poly::Var;

namespace {

template <std::size_t N>
poly::SparsePoly<N> load(const fs::path& dir, const char* file, const std::array<Var, N>& expected) {
  const fs::path path = dir / file;
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::data_error, "cannot open coefficient file " + path.string());
  poly::SparsePoly<N> p;
  try {
    p = poly::read_poly<N>(in);
  } catch (const Error& e) {
    throw Error(ErrorCode::data_error, path.string() + ": " + e.what());
  }
  if (p.vars() != expected) throw Error(ErrorCode::data_error, path.string() + ": unexpected variable order");
  if (p.is_zero()) throw Error(ErrorCode::data_error, path.string() + ": empty polynomial");
  return p;
}

bool has_data(const fs::path& dir) {
  std::error_code ec;
  return !dir.empty() && fs::exists(dir / "h.poly", ec);
}

}  // namespace

fs::path default_data_dir() {
  if (const char* env = std::getenv(kDataDirEnv); env != nullptr && *env != '\0') return fs::path(env);
  const fs::path configured(SOEINSTEIN_DEFAULT_DATA_DIR);
  if (has_data(configured)) return configured;
  return fs::path(SOEINSTEIN_INSTALL_DATA_DIR);
}

CoefficientData load_coefficient_data(const fs::path& dir) {
  CoefficientData d;
  d.f1 = load<5>(dir, "f1.poly", {Var::x2, Var::x3, Var::x12, Var::k, Var::l});
  d.f2 = load<5>(dir, "f2.poly", {Var::x2, Var::x3, Var::x12, Var::k, Var::l});
  d.f3 = load<5>(dir, "f3.poly", {Var::x2, Var::x3, Var::x12, Var::k, Var::l});
  d.f2_cofactor = load<4>(dir, "f2_cofactor.poly", {Var::x2, Var::x12, Var::k, Var::l});
  d.g1 = load<4>(dir, "g1.poly", {Var::x3, Var::x12, Var::k, Var::l});
  d.g2 = load<4>(dir, "g2.poly", {Var::x3, Var::x12, Var::k, Var::l});
  d.h = load<3>(dir, "h.poly", {Var::x12, Var::k, Var::l});
  d.hlin = load<4>(dir, "hlin.poly", {Var::x12, Var::x3, Var::k, Var::l});
  d.p = load<3>(dir, "p.poly", {Var::x3, Var::k, Var::l});
  d.source = dir;
  return d;
}

const CoefficientData& default_coefficient_data() {
  static const CoefficientData data = load_coefficient_data(default_data_dir());
  return data;
}

}  // namespace soe::solver
