#pragma once

#include "soeinstein/poly/sparse_poly.hpp"
#include "soeinstein/poly/unipoly.hpp"
#include "soeinstein/solver/coefficient_data.hpp"

namespace soe::solver {

using poly::BiPoly;
using poly::TriPoly;
using poly::UniPoly;

// Einstein system for SO(2k + l) with blocks (k, k, l) under the ansatz
// x1 = x2, x13 = x23 = 1. Polynomials are in (x2, x3, x12):
//   f1 ~ r2 - r3,  f2 ~ r2 - r12,  f3 ~ r3 - r13
// each scaled by 4(n - 2) and the smallest monomial clearing denominators.
struct SystemKL {
  int k = 0;
  int l = 0;
  TriPoly f1, f2, f3;
};

// The three numerators derived symbolically from the closed-form Ricci
// components (Laurent arithmetic over Q).
SystemKL derive_system_from_ricci(int k, int l);

// Instantiates the published system at (k, l) without any checking.
SystemKL published_system(int k, int l, const CoefficientData& data);

// Derives the system and checks it coefficient-for-coefficient against the
// published one (after removing monomial content from the latter, which only
// matters at l = 2). Throws Error(out_of_range) unless k >= 3 and l >= 2, and
// Error(derivation_mismatch) on any coefficient difference.
SystemKL build_system(int k, int l, const CoefficientData& data = default_coefficient_data());

// f2 = (x2 - x12) * quad, both factors over (x2, x12).
struct F2Factors {
  BiPoly linear;
  BiPoly quad;
};
// Throws Error(factorization_mismatch) when x2 - x12 does not divide f2 or
// the cofactor differs from the published one.
F2Factors factor_f2(const SystemKL& sys, const CoefficientData& data = default_coefficient_data());

// x2 = numerator(x12) / denominator(x12) from quad = 0.
struct X2ClosedForm {
  UniPoly numerator;
  UniPoly denominator;
};
X2ClosedForm solve_quad_for_x2(const F2Factors& factors);

// Both polynomials over (x3, x12) after substituting the x2 closed form into
// f1 and f3, clearing the positive denominator, and removing monomial content.
struct SubstitutedPair {
  BiPoly g1;
  BiPoly g2;
};
// Scaled to coincide with the published g1, g2 up to monomial content; throws
// Error(derivation_mismatch) when they are not proportional.
SubstitutedPair substitute_x2(const SystemKL& sys, const X2ClosedForm& x2,
                              const CoefficientData& data = default_coefficient_data());

// Drops a variable a polynomial does not depend on.
BiPoly project_to(const TriPoly& p, poly::Var a, poly::Var b);

}  // namespace soe::solver
