#pragma once

#include "soeinstein/error.hpp"
#include "soeinstein/lie/group_spec.hpp"
#include "soeinstein/ricci/metric.hpp"
#include "soeinstein/ricci/scalar.hpp"

namespace soe::ricci {

template <class T>
void require_positive(const MetricParams<T>& x) {
  for (const auto& v : x.as_array()) {
    if (!is_positive(v)) throw Error(ErrorCode::degenerate_metric, "degenerate metric");
  }
}

// Closed-form Ricci components of the six-parameter family on
// SO(k1 + k2 + k3). Exact when T is exact.
template <class T>
RicciComponents<T> ricci_closed(const lie::GroupSpec& spec, const MetricParams<T>& x) {
  require_positive(x);
  using poly::BigRational;
  const auto c = [&](long num, long den = 1) { return lift(x.x1, BigRational(num, den)); };
  const long k1 = spec.k1();
  const long k2 = spec.k2();
  const long k3 = spec.k3();
  const T q = c(1, 4 * (spec.n() - 2));  // 1 / (4(n-2))
  const T half = c(1, 2);

  RicciComponents<T> r;
  r.r1 = c(k1 - 2) * q / x.x1 + q * (c(k2) * x.x1 / (x.x12 * x.x12) + c(k3) * x.x1 / (x.x13 * x.x13));
  r.r2 = c(k2 - 2) * q / x.x2 + q * (c(k1) * x.x2 / (x.x12 * x.x12) + c(k3) * x.x2 / (x.x23 * x.x23));
  r.r3 = c(k3 - 2) * q / x.x3 + q * (c(k1) * x.x3 / (x.x13 * x.x13) + c(k2) * x.x3 / (x.x23 * x.x23));
  r.r12 = half / x.x12 +
          c(k3) * q * (x.x12 / (x.x13 * x.x23) - x.x13 / (x.x12 * x.x23) - x.x23 / (x.x12 * x.x13)) -
          q * (c(k1 - 1) * x.x1 / (x.x12 * x.x12) + c(k2 - 1) * x.x2 / (x.x12 * x.x12));
  r.r13 = half / x.x13 +
          c(k2) * q * (x.x13 / (x.x12 * x.x23) - x.x12 / (x.x13 * x.x23) - x.x23 / (x.x12 * x.x13)) -
          q * (c(k1 - 1) * x.x1 / (x.x13 * x.x13) + c(k3 - 1) * x.x3 / (x.x13 * x.x13));
  r.r23 = half / x.x23 +
          c(k1) * q * (x.x23 / (x.x13 * x.x12) - x.x13 / (x.x12 * x.x23) - x.x12 / (x.x23 * x.x13)) -
          q * (c(k2 - 1) * x.x2 / (x.x23 * x.x23) + c(k3 - 1) * x.x3 / (x.x23 * x.x23));
  return r;
}

}  // namespace soe::ricci
