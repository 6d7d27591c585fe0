#pragma once

#include <optional>
#include <vector>

#include "soeinstein/poly/roots.hpp"
#include "soeinstein/poly/sparse_poly.hpp"
#include "soeinstein/poly/unipoly.hpp"
#include "soeinstein/solver/coefficient_data.hpp"
#include "soeinstein/solver/system.hpp"

namespace soe::solver {

struct EliminationResult {
  int k = 0;
  int l = 0;
  BiPoly g1, g2;              // (x3, x12)
  UniPoly resultant_R;        // Res_x3(g1, g2), in x12
  UniPoly paper_h;            // x12, degree 8
  BiPoly paper_hlin;          // (x12, x3), degree 1 in x3
  UniPoly paper_p;            // x3, degree 8
  bool h_divides_resultant = false;
  // Positive roots of paper_h, each checked to annihilate resultant_R.
  std::vector<poly::RefinedRoot> h_positive_roots;
};

struct EliminationOptions {
  double refine_rel_tol = 1e-12;
  // |R(root)| <= agreement_tol * max |R coefficient|
  double agreement_tol = 1e-6;
};

// Computes the resultant and instantiates the published elimination
// polynomials. Throws Error(shared_factor) if the resultant vanishes
// identically, Error(transcription_mismatch) on a degree invariant failure,
// and Error(elimination_mismatch) when a positive root of paper_h is not a
// root of the resultant.
EliminationResult eliminate(const SubstitutedPair& pair, int k, int l, const EliminationOptions& opts = {},
                            const CoefficientData& data = default_coefficient_data());

// |R(x)| / max |R coefficient| evaluated exactly at the double x.
double relative_value(const UniPoly& p, double x);

// x3 from paper_hlin = 0 (linear in x3), certified by interval evaluation
// over the x12 bracket. Throws Error(invalid_argument) if the x3
// coefficient can vanish on the bracket.
poly::RefinedRoot back_substitute(const EliminationResult& er, const poly::RefinedRoot& x12);

// Fallback without the linear relation: the real roots of g2(x12*, x3) for the
// rational x12* = x12.value, keeping the one that also annihilates g1.
// Throws Error(no_consistent_x3) when neither root does.
poly::RefinedRoot back_substitute_quadratic(const EliminationResult& er, const poly::RefinedRoot& x12,
                                            double rel_tol = 1e-12, double consistency_tol = 1e-8);

// x2 = numerator / denominator, enclosed over the x12 bracket.
poly::RefinedRoot evaluate_x2(const X2ClosedForm& form, const poly::RefinedRoot& x12);

}  // namespace soe::solver
