#include "soeinstein/solver/solve.hpp"

#include <algorithm>
#include <sstream>

#include "soeinstein/error.hpp"
#include "soeinstein/ricci/ricci_closed.hpp"
#include "soeinstein/solver/elimination.hpp"
#include "soeinstein/solver/system.hpp"

namespace soe::solver {

using poly::BigRational;
using poly::RefinedRoot;
using poly::UniPoly;

std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::below_one: return "below_one";
    case Branch::above_one: return "above_one";
    case Branch::at_one: break;
  }
  return "at_one";
}

int SolveResult::count(Branch b) const {
  return static_cast<int>(std::count_if(solutions.begin(), solutions.end(),
                                        [b](const EinsteinSolution& s) { return s.branch == b; }));
}

namespace {

Branch classify_branch(const UniPoly& f, const RefinedRoot& r) {
  const BigRational one(1);
  if (r.certified_hi < one) return Branch::below_one;
  if (r.certified_lo > one) return Branch::above_one;
  if (f.sign_at(one) == 0) return Branch::at_one;
  return f.sign_at(r.certified_lo) != f.sign_at(one) ? Branch::below_one : Branch::above_one;
}

// Einstein residual of the metric exactly as reported (its double values).
ricci::EinsteinResidual exact_residual(const lie::GroupSpec& spec, const ricci::MetricParams<double>& x) {
  ricci::MetricParams<BigRational> q;
  for (auto m : lie::kModules) q[m] = BigRational::from_double(x[m]);
  const auto r = ricci::ricci_closed(spec, q);
  BigRational weighted;
  BigRational total;
  for (auto m : lie::kModules) {
    weighted += BigRational(spec.dim(m)) * r[m];
    total += BigRational(spec.dim(m));
  }
  const BigRational lambda = weighted / total;
  BigRational worst;
  for (auto m : lie::kModules) worst = max(worst, abs(r[m] - lambda));
  ricci::EinsteinResidual out;
  out.lambda = lambda.to_double();
  if (lambda.is_zero()) {
    out.zero_lambda = true;
    out.residual = worst.to_double();
  } else {
    out.residual = (worst / abs(lambda)).to_double();
  }
  return out;
}

}  // namespace

SolveResult solve(int k, int l, const SolveOptions& opts, const CoefficientData& data) {
  if (k < 3 || l < 2) {
    throw Error(ErrorCode::out_of_range,
                "need k >= 3 and l >= 2, got k = " + std::to_string(k) + ", l = " + std::to_string(l));
  }
  const SystemKL sys = build_system(k, l, data);
  const F2Factors factors = factor_f2(sys, data);
  const X2ClosedForm x2form = solve_quad_for_x2(factors);
  const SubstitutedPair pair = substitute_x2(sys, x2form, data);
  const EliminationResult er = eliminate(pair, k, l, {opts.refine_rel_tol, 1e-6}, data);
  const lie::GroupSpec spec(k, k, l);

  SolveResult out;
  out.k = k;
  out.l = l;
  out.guarantee_applies = l > k && k >= 3;

  for (const auto& [factor, multiplicity] : poly::squarefree_decomposition(er.paper_h)) {
    for (const auto& iv : poly::isolate_roots(factor, BigRational(0), poly::root_search_bound(factor))) {
      const RefinedRoot x12 = poly::refine_root(factor, iv, {opts.refine_rel_tol, 3});
      auto reject = [&](std::string why) { out.rejected.push_back({x12.value, std::move(why)}); };

      RefinedRoot x3;
      if (opts.use_linear_relation) {
        try {
          x3 = back_substitute(er, x12);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::invalid_argument) throw;
          x3 = back_substitute_quadratic(er, x12, opts.refine_rel_tol);
        }
      } else {
        try {
          x3 = back_substitute_quadratic(er, x12, opts.refine_rel_tol);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::no_consistent_x3) throw;
          reject(e.what());
          continue;
        }
      }
      if (!(x3.value > 0.0)) {
        reject("x3 <= 0");
        continue;
      }
      const RefinedRoot x2 = evaluate_x2(x2form, x12);
      if (!(x2.value > 0.0)) {
        reject("x2 <= 0");
        continue;
      }

      EinsteinSolution s;
      s.k = k;
      s.l = l;
      s.metric = {x2.value, x2.value, x3.value, x12.value, 1.0, 1.0};
      s.x12_root = x12;
      s.x3_root = x3;
      s.x2_root = x2;
      const auto res = exact_residual(spec, s.metric);
      s.lambda = res.lambda;
      s.residual = res.residual;
      if (res.zero_lambda || !(s.residual <= opts.tol)) {
        std::ostringstream os;
        os << "Einstein residual " << s.residual << " exceeds " << opts.tol;
        reject(os.str());
        continue;
      }
      s.reductivity = ricci::classify_reductive(s.metric, opts.reductive_tol);
      if (s.reductivity.naturally_reductive()) {
        reject("naturally reductive (" + std::string(ricci::to_string(s.reductivity.case_matched)) + ")");
        continue;
      }
      s.branch = classify_branch(factor, x12);
      s.resultant_value = relative_value(er.resultant_R, x12.value);
      s.h_value = relative_value(er.paper_h, x12.value);
      if (multiplicity > 1) s.multiplicity = multiplicity;
      out.solutions.push_back(std::move(s));
    }
  }
  std::sort(out.solutions.begin(), out.solutions.end(),
            [](const EinsteinSolution& a, const EinsteinSolution& b) { return a.metric.x12 < b.metric.x12; });

  out.guarantee_met = out.count(Branch::below_one) >= 1 && out.count(Branch::above_one) >= 1;
  if (out.guarantee_applies && !out.guarantee_met && opts.enforce_guarantee) {
    std::ostringstream os;
    os << "expected certified solutions with x12 < 1 and x12 > 1 for (k, l) = (" << k << ", " << l << "), found "
       << out.count(Branch::below_one) << " below and " << out.count(Branch::above_one) << " above";
    throw Error(ErrorCode::theorem_check_failed, os.str());
  }
  return out;
}

ricci::MetricParams<double> normalize_to_unit_lambda(const EinsteinSolution& s) {
  ricci::MetricParams<double> m;
  for (auto mod : lie::kModules) m[mod] = s.metric[mod] * s.lambda;
  return m;
}

}  // namespace soe::solver
