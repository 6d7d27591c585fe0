#pragma once

#include <optional>
#include <vector>

#include "soeinstein/poly/rational.hpp"
#include "soeinstein/poly/unipoly.hpp"

namespace soe::poly {

// Isolating interval (lo, hi] for a simple real root of a squarefree
// polynomial. Either the endpoint signs differ, or hi is itself the root.
struct RootInterval {
  BigRational lo;
  BigRational hi;
  int parity = 0;  // sign of the polynomial at lo
};

struct RefinedRoot {
  double value = 0.0;
  BigRational certified_lo;
  BigRational certified_hi;
  double relative_width = 0.0;

  bool exact() const { return certified_lo == certified_hi; }
  bool contains(const BigRational& x) const { return certified_lo <= x && x <= certified_hi; }
};

// Sturm chain of a squarefree polynomial. Construction throws
// Error(not_squarefree) when gcd(p, p') is nonconstant.
class SturmSequence {
 public:
  explicit SturmSequence(const UniPoly& p);

  const UniPoly& polynomial() const { return chain_.front(); }
  const std::vector<UniPoly>& chain() const { return chain_; }

  // Exact number of distinct real roots in the open interval (lo, hi).
  // Endpoints may be roots; one-sided limits are used there.
  int count(const BigRational& lo, const BigRational& hi) const;

 private:
  enum class Side { right, left };
  int variations(const BigRational& x, Side side) const;
  std::vector<UniPoly> chain_;
};

int sturm_count(const UniPoly& p, const BigRational& lo, const BigRational& hi);

// Pairwise disjoint isolating intervals, sorted ascending, one per root of
// the squarefree p in the open interval (lo, hi).
std::vector<RootInterval> isolate_roots(const UniPoly& p, const BigRational& lo, const BigRational& hi);

struct RefineOptions {
  double rel_tol = 1e-12;
  int newton_steps = 3;
};

// Exact bisection to the requested relative width, then floating Newton
// polishing of the reported value inside the certified bracket.
RefinedRoot refine_root(const UniPoly& p, const RootInterval& iv, const RefineOptions& opts = {});

// Same as refine_root, also returning min(|p(lo)|, |p(hi)|) after every
// bisection generation.
RefinedRoot refine_root_traced(const UniPoly& p, const RootInterval& iv, const RefineOptions& opts,
                               std::vector<BigRational>& trace);

// 1 + max |c_i / c_deg| over i < deg. Requires deg >= 1.
BigRational cauchy_bound(const UniPoly& p);
// Upper end of the positive search range, 1 + max(1, cauchy_bound(p)).
BigRational root_search_bound(const UniPoly& p);

// Sign (+1, -1, 0) of each coefficient by ascending degree.
std::vector<int> descartes_signs(const UniPoly& p);
int sign_variations(const std::vector<int>& signs);

struct RationalInterval {
  BigRational lo;
  BigRational hi;
};

// Rigorous enclosure of p over [lo, hi] by interval Horner evaluation.
RationalInterval eval_enclosure(const UniPoly& p, const BigRational& lo, const BigRational& hi);

// Closest double to x inside [lo, hi]. When the bracket is narrower than one
// ulp the nearest representable neighbour is returned.
double clamp_to_bracket(double x, const BigRational& lo, const BigRational& hi);

// Relative width (hi - lo) / max(|lo|, |hi|); 0 for a point interval.
double relative_width(const BigRational& lo, const BigRational& hi);

}  // namespace soe::poly
