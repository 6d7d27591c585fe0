#include "soeinstein/ricci/einstein.hpp"

#include <algorithm>
#include <cmath>

#include "soeinstein/error.hpp"
#include "soeinstein/ricci/ricci_closed.hpp"

namespace soe::ricci {

EinsteinResidual einstein_residual(const RicciComponents<double>& rc, const std::array<int, 6>& weights) {
  const auto r = rc.as_array();
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < 6; ++i) {
    if (!std::isfinite(r[i])) throw Error(ErrorCode::invalid_argument, "non-finite Ricci component");
    num += weights[i] * r[i];
    den += weights[i];
  }
  if (den <= 0.0) throw Error(ErrorCode::invalid_argument, "Einstein weights must have positive sum");
  EinsteinResidual out;
  out.lambda = num / den;
  double worst = 0.0;
  if (out.lambda == 0.0) {
    out.zero_lambda = true;
    for (double v : r) worst = std::max(worst, std::abs(v));
  } else {
    for (double v : r) worst = std::max(worst, std::abs(v - out.lambda) / std::abs(out.lambda));
  }
  out.residual = worst;
  return out;
}

EinsteinResidual einstein_residual(const RicciComponents<double>& rc, const lie::GroupSpec& spec) {
  return einstein_residual(rc, spec.dims());
}

std::string_view to_string(ReductiveCase c) {
  switch (c) {
    case ReductiveCase::case1: return "case1";
    case ReductiveCase::case2: return "case2";
    case ReductiveCase::case3: return "case3";
    case ReductiveCase::case4: return "case4";
    case ReductiveCase::none: return "none";
  }
  return "none";
}

ReductivityVerdict classify_reductive(const MetricParams<double>& x, double tol) {
  require_positive(x);
  const double s = x.x13;
  const double x1 = x.x1 / s, x2 = x.x2 / s, x3 = x.x3 / s;
  const double x12 = x.x12 / s, x13 = 1.0, x23 = x.x23 / s;
  const auto eq = [tol](double a, double b) { return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b)); };

  ReductivityVerdict v;
  v.witness_tolerance = tol;
  if (eq(x1, x2) && eq(x2, x12) && eq(x13, x23)) v.case_matched = ReductiveCase::case1;
  else if (eq(x2, x3) && eq(x3, x23) && eq(x12, x13)) v.case_matched = ReductiveCase::case2;
  else if (eq(x1, x3) && eq(x3, x13) && eq(x12, x23)) v.case_matched = ReductiveCase::case3;
  else if (eq(x12, x13) && eq(x13, x23)) v.case_matched = ReductiveCase::case4;
  return v;
}

}  // namespace soe::ricci
