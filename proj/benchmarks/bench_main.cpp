#include <benchmark/benchmark.h>

#include "soeinstein/lie/ricci_general.hpp"
#include "soeinstein/lie/triple_products.hpp"
#include "soeinstein/poly/roots.hpp"
#include "soeinstein/ricci/ricci_closed.hpp"
#include "soeinstein/solver/elimination.hpp"
#include "soeinstein/solver/enumerate.hpp"
#include "soeinstein/solver/solve.hpp"
#include "soeinstein/solver/system.hpp"

namespace {

using namespace soe;

void BM_TripleProducts(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const lie::GroupSpec spec(n, n, n + 1);
  for (auto _ : state) benchmark::DoNotOptimize(lie::triple_products(spec));
}
BENCHMARK(BM_TripleProducts)->Arg(3)->Arg(5)->Arg(8);

void BM_RicciGeneral(benchmark::State& state) {
  const lie::GroupSpec spec(3, 4, 6);
  const auto tp = lie::triple_products(spec);
  const ricci::MetricParams<double> x{0.5, 1.5, 2, 0.75, 1.25, 3};
  for (auto _ : state) benchmark::DoNotOptimize(lie::ricci_general(spec, tp, x));
}
BENCHMARK(BM_RicciGeneral);

void BM_RicciClosed(benchmark::State& state) {
  const lie::GroupSpec spec(3, 4, 6);
  const ricci::MetricParams<double> x{0.5, 1.5, 2, 0.75, 1.25, 3};
  for (auto _ : state) benchmark::DoNotOptimize(ricci::ricci_closed(spec, x));
}
BENCHMARK(BM_RicciClosed);

void BM_BuildSystem(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(solver::build_system(4, 7));
}
BENCHMARK(BM_BuildSystem);

void BM_Eliminate(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const int l = static_cast<int>(state.range(1));
  const auto sys = solver::build_system(k, l);
  const auto pair = solver::substitute_x2(sys, solver::solve_quad_for_x2(solver::factor_f2(sys)));
  for (auto _ : state) benchmark::DoNotOptimize(solver::eliminate(pair, k, l));
}
BENCHMARK(BM_Eliminate)->Args({3, 4})->Args({9, 28})->Unit(benchmark::kMillisecond);

void BM_RefineRoot(benchmark::State& state) {
  const auto er = [] {
    const auto sys = solver::build_system(3, 4);
    return solver::eliminate(solver::substitute_x2(sys, solver::solve_quad_for_x2(solver::factor_f2(sys))), 3, 4);
  }();
  const auto h = poly::squarefree_part(er.paper_h);
  const auto roots = poly::isolate_roots(h, poly::BigRational(0), poly::root_search_bound(h));
  for (auto _ : state) benchmark::DoNotOptimize(poly::refine_root(h, roots.front()));
}
BENCHMARK(BM_RefineRoot);

void BM_Solve(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const int l = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(solver::solve(k, l));
}
BENCHMARK(BM_Solve)->Args({3, 4})->Args({5, 9})->Args({9, 28})->Unit(benchmark::kMillisecond);

void BM_Enumerate(benchmark::State& state) {
  solver::EnumerateOptions opts;
  opts.workers = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(solver::enumerate(static_cast<int>(state.range(0)), opts));
}
BENCHMARK(BM_Enumerate)->Args({30, 1})->Args({30, 4})->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
BENCHMARK_MAIN();
