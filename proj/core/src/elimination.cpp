#include "soeinstein/solver/elimination.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "soeinstein/error.hpp"
#include "soeinstein/poly/resultant.hpp"

namespace soe::solver {

using poly::BigRational;
using poly::RefinedRoot;
using poly::Var;

namespace {

std::array<BigRational, 2> kl(int k, int l) { return {BigRational(k), BigRational(l)}; }

void require_degree(int actual, int expected, const char* what) {
  if (actual != expected) {
    std::ostringstream os;
    os << what << " has degree " << actual << ", expected " << expected;
    throw Error(ErrorCode::transcription_mismatch, os.str());
  }
}

BigRational x12_point(const RefinedRoot& x12) {
  return x12.exact() ? x12.certified_lo : BigRational::from_double(x12.value);
}

// Encloses num(x) / den(x) for x in the certified bracket of x12.
RefinedRoot quotient_root(const UniPoly& num, const UniPoly& den, const RefinedRoot& x12) {
  const auto n = poly::eval_enclosure(num, x12.certified_lo, x12.certified_hi);
  const auto d = poly::eval_enclosure(den, x12.certified_lo, x12.certified_hi);
  if (d.lo.sign() <= 0 && d.hi.sign() >= 0) {
    throw Error(ErrorCode::invalid_argument, "denominator may vanish on the x12 bracket");
  }
  const std::array<BigRational, 4> q = {n.lo / d.lo, n.lo / d.hi, n.hi / d.lo, n.hi / d.hi};
  RefinedRoot out;
  out.certified_lo = *std::min_element(q.begin(), q.end());
  out.certified_hi = *std::max_element(q.begin(), q.end());
  const BigRational x = x12_point(x12);
  const BigRational point = num.eval(x) / den.eval(x);
  out.value = poly::clamp_to_bracket(point.to_double(), out.certified_lo, out.certified_hi);
  out.relative_width = poly::relative_width(out.certified_lo, out.certified_hi);
  return out;
}

}  // namespace

double relative_value(const UniPoly& p, double x) {
  if (p.is_zero()) return 0.0;
  return (abs(p.eval(BigRational::from_double(x))) / p.max_abs_coeff()).to_double();
}

EliminationResult eliminate(const SubstitutedPair& pair, int k, int l, const EliminationOptions& opts,
                            const CoefficientData& data) {
  EliminationResult er;
  er.k = k;
  er.l = l;
  er.g1 = pair.g1;
  er.g2 = pair.g2;
  er.resultant_R = poly::resultant(pair.g1, pair.g2, Var::x3);
  if (er.resultant_R.is_zero()) {
    throw Error(ErrorCode::shared_factor, "g1 and g2 share a factor involving x3");
  }
  er.paper_h = poly::to_unipoly(poly::specialize_trailing<1>(data.h, kl(k, l)));
  er.paper_hlin = poly::specialize_trailing<2>(data.hlin, kl(k, l));
  er.paper_p = poly::to_unipoly(poly::specialize_trailing<1>(data.p, kl(k, l)));
  require_degree(er.paper_h.degree(), 8, "h");
  require_degree(er.paper_hlin.degree_in(Var::x3), 1, "hlin in x3");
  require_degree(er.paper_p.degree(), 8, "p");

  er.h_divides_resultant = poly::divmod(er.resultant_R, er.paper_h).remainder.is_zero();

  const UniPoly sf = poly::squarefree_part(er.paper_h);
  const poly::RefineOptions ro{opts.refine_rel_tol, 3};
  for (const auto& iv : poly::isolate_roots(sf, BigRational(0), poly::root_search_bound(sf))) {
    RefinedRoot r = poly::refine_root(sf, iv, ro);
    const double v = relative_value(er.resultant_R, r.value);
    if (!(v <= opts.agreement_tol)) {
      std::ostringstream os;
      os << "positive root x12 = " << r.value << " of h is not a root of the resultant (relative value " << v << ")";
      throw Error(ErrorCode::elimination_mismatch, os.str());
    }
    er.h_positive_roots.push_back(std::move(r));
  }
  return er;
}

RefinedRoot back_substitute(const EliminationResult& er, const RefinedRoot& x12) {
  const std::vector<UniPoly> c = er.paper_hlin.coefficients_in(er.paper_hlin.index_of(Var::x3));
  if (c.size() != 2) throw Error(ErrorCode::transcription_mismatch, "hlin is not linear in x3");
  // c0 + c1 x3 = 0
  return quotient_root(-c[0], c[1], x12);
}

RefinedRoot back_substitute_quadratic(const EliminationResult& er, const RefinedRoot& x12, double rel_tol,
                                      double consistency_tol) {
  const BigRational x = x12_point(x12);
  const std::size_t i12 = er.g2.index_of(Var::x12);
  const std::size_t i3 = er.g2.index_of(Var::x3);
  const BiPoly g2x = er.g2.substitute(i12, x);
  UniPoly u(Var::x3);
  for (const auto& [e, c] : g2x.terms()) u += UniPoly::monomial(c, e[i3], Var::x3);
  if (u.degree() < 1) throw Error(ErrorCode::no_consistent_x3, "g2 does not determine x3 at this x12");

  const UniPoly sf = poly::squarefree_part(u);
  const BigRational bound = poly::root_search_bound(sf);
  const double xd = x.to_double();
  std::optional<RefinedRoot> best;
  double best_residual = std::numeric_limits<double>::infinity();
  for (const auto& iv : poly::isolate_roots(sf, -bound, bound)) {
    RefinedRoot r = poly::refine_root(sf, iv, {rel_tol, 3});
    std::array<double, 2> at{};
    at[er.g1.index_of(Var::x3)] = r.value;
    at[er.g1.index_of(Var::x12)] = xd;
    const double scale = er.g1.abs_scale(at);
    const double res = scale > 0.0 ? std::abs(er.g1.eval(at)) / scale : 0.0;
    if (res < best_residual) {
      best_residual = res;
      best = std::move(r);
    }
  }
  if (!best || !(best_residual <= consistency_tol)) {
    std::ostringstream os;
    os << "no root of g2 at x12 = " << xd << " annihilates g1";
    throw Error(ErrorCode::no_consistent_x3, os.str());
  }
  return *best;
}

RefinedRoot evaluate_x2(const X2ClosedForm& form, const RefinedRoot& x12) {
  return quotient_root(form.numerator, form.denominator, x12);
}

}  // namespace soe::solver
