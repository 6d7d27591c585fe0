#pragma once

#include <vector>

#include "soeinstein/poly/sparse_poly.hpp"
#include "soeinstein/poly/unipoly.hpp"

namespace soe::poly {

using PolyMatrix = std::vector<std::vector<UniPoly>>;

// Sylvester matrix of f, g viewed as polynomials in `eliminate`, entries in
// the remaining variable. Throws Error(nothing_to_eliminate) if either input
// has degree < 1 in the eliminated variable.
PolyMatrix sylvester_matrix(const BiPoly& f, const BiPoly& g, Var eliminate);

// Fraction-free (Bareiss) determinant over Q[x].
UniPoly bareiss_determinant(PolyMatrix m);

UniPoly resultant(const BiPoly& f, const BiPoly& g, Var eliminate);

}  // namespace soe::poly
