#include "soeinstein/solver/enumerate.hpp"

#include <algorithm>
#include <future>
#include <sstream>

#include "soeinstein/error.hpp"

namespace soe::solver {

int count_bound(int n) { return 2 * ((n - 1) / 3 - 2); }

EnumerationReport enumerate(int n, const EnumerateOptions& opts, const CoefficientData& data) {
  if (n < 10) throw Error(ErrorCode::out_of_range, "need n >= 10, got n = " + std::to_string(n));
  EnumerationReport rep;
  rep.n = n;
  rep.bound = count_bound(n);

  std::vector<int> ks;
  for (int k = 3; k <= (n - 1) / 3; ++k) ks.push_back(k);

  SolveOptions so = opts.solve;
  so.enforce_guarantee = false;
  std::vector<SolveResult> results(ks.size());
  const std::size_t workers = std::max<std::size_t>(1, opts.workers);
  for (std::size_t start = 0; start < ks.size(); start += workers) {
    std::vector<std::future<SolveResult>> batch;
    for (std::size_t i = start; i < std::min(ks.size(), start + workers); ++i) {
      const int k = ks[i];
      batch.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred,
                                 [k, n, &so, &data] { return solve(k, n - 2 * k, so, data); }));
    }
    for (std::size_t i = 0; i < batch.size(); ++i) results[start + i] = batch[i].get();
  }

  for (const auto& r : results) {
    PerK row;
    row.k = r.k;
    row.l = r.l;
    row.certified = static_cast<int>(r.solutions.size());
    row.below_one = r.count(Branch::below_one);
    row.above_one = r.count(Branch::above_one);
    rep.per_k.push_back(row);
    rep.total += row.certified;
    rep.solutions.insert(rep.solutions.end(), r.solutions.begin(), r.solutions.end());
  }
  std::stable_sort(rep.solutions.begin(), rep.solutions.end(), [](const EinsteinSolution& a, const EinsteinSolution& b) {
    if (a.k != b.k) return a.k < b.k;
    if (a.l != b.l) return a.l < b.l;
    if (a.branch != b.branch) return a.branch < b.branch;
    return a.metric.x12 < b.metric.x12;
  });
  rep.met = rep.total >= rep.bound;
  if (!rep.met && opts.enforce_bound) {
    std::ostringstream os;
    os << "n = " << n << ": " << rep.total << " certified solutions, bound " << rep.bound << ";";
    for (const auto& row : rep.per_k) os << " k=" << row.k << ",l=" << row.l << ": " << row.certified;
    throw Error(ErrorCode::count_check_failed, os.str());
  }
  return rep;
}

}  // namespace soe::solver
