#include "soeinstein/lie/ricci_general.hpp"

#include "soeinstein/ricci/ricci_closed.hpp"

namespace soe::lie {

ricci::RicciComponents<double> ricci_general(const GroupSpec& spec, const TripleProducts& tp,
                                             const ricci::MetricParams<double>& x) {
  ricci::require_positive(x);
  ricci::RicciComponents<double> r;
  for (Module k : kModules) {
    const double xk = x[k];
    const double dk = spec.dim(k);
    double gain = 0.0;
    double loss = 0.0;
    for (Module i : kModules) {
      for (Module j : kModules) {
        const double t = tp(k, j, i);
        if (t == 0.0) continue;
        gain += xk / (x[j] * x[i]) * t;
        loss += x[j] / (xk * x[i]) * t;
      }
    }
    r[k] = 1.0 / (2.0 * xk) + gain / (4.0 * dk) - loss / (2.0 * dk);
  }
  return r;
}

}  // namespace soe::lie
