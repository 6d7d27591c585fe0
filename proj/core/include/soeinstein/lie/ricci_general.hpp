#pragma once

#include "soeinstein/lie/group_spec.hpp"
#include "soeinstein/lie/triple_products.hpp"
#include "soeinstein/ricci/metric.hpp"

namespace soe::lie {

// Ricci components from the triple products:
//   r_k = 1/(2 x_k) + 1/(4 d_k) sum_{i,j} x_k/(x_j x_i) (kji)
//                   - 1/(2 d_k) sum_{i,j} x_j/(x_k x_i) (jki)
// Throws Error(degenerate_metric) for a nonpositive parameter.
ricci::RicciComponents<double> ricci_general(const GroupSpec& spec, const TripleProducts& tp,
                                             const ricci::MetricParams<double>& x);

}  // namespace soe::lie
