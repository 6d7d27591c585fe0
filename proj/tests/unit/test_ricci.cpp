#include <cmath>

#include "doctest.h"
#include "generators.hpp"
#include "soeinstein/error.hpp"
#include "soeinstein/ricci/einstein.hpp"
#include "soeinstein/ricci/ricci_closed.hpp"

using soe::Error;
using soe::ErrorCode;
using soe::lie::GroupSpec;
using soe::lie::kModules;
using soe::poly::BigRational;
using namespace soe::ricci;

namespace {

MetricParams<BigRational> rational_metric(soe::test::Gen& g) {
  MetricParams<BigRational> x;
  for (auto m : kModules) x[m] = BigRational(g.integer(1, 40), g.integer(1, 9));
  return x;
}

}  // namespace

TEST_CASE("bi-invariant metric has Ricci 1/4 exactly") {
  for (auto [a, b, c] : {std::array<int, 3>{2, 2, 3}, {3, 3, 4}, {3, 4, 5}, {4, 4, 5}}) {
    const GroupSpec spec(a, b, c);
    const MetricParams<BigRational> one{1, 1, 1, 1, 1, 1};
    const auto r = ricci_closed(spec, one);
    for (auto m : kModules) CHECK(r[m] == BigRational(1, 4));
  }
}

TEST_CASE("r1 on (2, 2, 3) loses its first term") {
  const GroupSpec spec(2, 2, 3);
  soe::test::Gen g(131);
  for (int t = 0; t < 20; ++t) {
    const auto x = rational_metric(g);
    const auto r = ricci_closed(spec, x);
    const BigRational expect = x.x1 / BigRational(20) * (BigRational(2) / (x.x12 * x.x12) + BigRational(3) / (x.x13 * x.x13));
    CHECK(r.r1 == expect);
  }
}

TEST_CASE("scaling the metric by 2 halves every component exactly") {
  const GroupSpec spec(3, 4, 5);
  soe::test::Gen g(137);
  for (int t = 0; t < 20; ++t) {
    const auto x = rational_metric(g);
    auto y = x;
    for (auto m : kModules) y[m] *= BigRational(2);
    const auto a = ricci_closed(spec, x);
    const auto b = ricci_closed(spec, y);
    for (auto m : kModules) CHECK(b[m] * BigRational(2) == a[m]);
  }
}

TEST_CASE("closed form is exactly equivariant under the block swap") {
  const GroupSpec spec(4, 4, 5);
  soe::test::Gen g(139);
  for (int t = 0; t < 20; ++t) {
    const auto x = rational_metric(g);
    auto y = x;
    std::swap(y.x1, y.x2);
    std::swap(y.x13, y.x23);
    const auto a = ricci_closed(spec, x);
    const auto b = ricci_closed(spec, y);
    CHECK(a.r1 == b.r2);
    CHECK(a.r2 == b.r1);
    CHECK(a.r13 == b.r23);
    CHECK(a.r23 == b.r13);
    CHECK(a.r3 == b.r3);
    CHECK(a.r12 == b.r12);
  }
}

TEST_CASE("symbolic and rational evaluation agree") {
  using soe::poly::TriPoly;
  using soe::poly::Var;
  const TriPoly::Vars v{Var::x2, Var::x3, Var::x12};
  const GroupSpec spec(3, 3, 4);
  MetricParams<TriPoly> s;
  s.x1 = s.x2 = TriPoly::variable(v, 0);
  s.x3 = TriPoly::variable(v, 1);
  s.x12 = TriPoly::variable(v, 2);
  s.x13 = s.x23 = TriPoly(v, BigRational(1));
  const auto rs = ricci_closed(spec, s);
  soe::test::Gen g(149);
  for (int t = 0; t < 20; ++t) {
    const BigRational a(g.integer(1, 30), g.integer(1, 7)), b(g.integer(1, 30), g.integer(1, 7)),
        c(g.integer(1, 30), g.integer(1, 7));
    const auto rq = ricci_closed(spec, MetricParams<BigRational>{a, a, b, c, 1, 1});
    for (auto m : kModules) CHECK(rs[m].eval({a, b, c}) == rq[m]);
  }
}

TEST_CASE("degenerate metric is rejected") {
  try {
    (void)ricci_closed(GroupSpec(3, 3, 4), MetricParams<double>{1, 1, 1, -1, 1, 1});
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::degenerate_metric);
  }
}

TEST_CASE("Einstein residual") {
  const RicciComponents<double> quarter{0.25, 0.25, 0.25, 0.25, 0.25, 0.25};
  const auto a = einstein_residual(quarter, GroupSpec(3, 3, 4));
  CHECK(a.lambda == doctest::Approx(0.25));
  CHECK(a.residual == 0.0);

  const std::array<int, 6> equal{1, 1, 1, 1, 1, 1};
  const auto b = einstein_residual({1, 1, 1, 1, 1, 2}, equal);
  CHECK(b.lambda == doctest::Approx(7.0 / 6.0));
  CHECK(b.residual == doctest::Approx(5.0 / 7.0));
  CHECK_FALSE(b.zero_lambda);

  const auto c = einstein_residual({1, -1, 0, 0, 0, 0}, equal);
  CHECK(c.zero_lambda);
  CHECK(c.residual == doctest::Approx(1.0));

  // Weighted by dimensions: d = (3, 3, 6, 9, 12, 12).
  const auto d = einstein_residual({1, 1, 1, 1, 1, 2}, GroupSpec(3, 3, 4));
  CHECK(d.lambda == doctest::Approx(57.0 / 45.0));
}

TEST_CASE("natural reductivity cases") {
  CHECK(classify_reductive({2, 2, 5, 2, 3, 3}).case_matched == ReductiveCase::case1);
  CHECK(classify_reductive({7, 2, 2, 4, 4, 2}).case_matched == ReductiveCase::case2);
  CHECK(classify_reductive({3, 7, 3, 5, 3, 5}).case_matched == ReductiveCase::case3);
  CHECK(classify_reductive({1, 2, 3, 4, 4, 4}).case_matched == ReductiveCase::case4);
  CHECK(classify_reductive({1, 2, 3, 4, 5, 6}).case_matched == ReductiveCase::none);
  CHECK(classify_reductive({1, 1, 1, 1, 1, 1}).case_matched == ReductiveCase::case1);
  CHECK(to_string(ReductiveCase::case4) == "case4");
}

TEST_CASE("property: classifier soundness") {
  soe::test::Gen g(151);
  for (double tol : {1e-12, 1e-8, 1e-4}) {
    for (int t = 0; t < 100; ++t) {
      const double a = g.real(0.1, 5), b = g.real(0.1, 5), c = g.real(0.1, 5), d = g.real(0.1, 5);
      const double e = g.real(0.1, 5), f = g.real(0.1, 5);
      CHECK(classify_reductive({a, a, b, a, c, c}, tol).naturally_reductive());
      CHECK(classify_reductive({d, a, a, b, b, a}, tol).naturally_reductive());
      CHECK(classify_reductive({a, d, a, b, a, b}, tol).naturally_reductive());
      CHECK(classify_reductive({e, f, d, a, a, a}, tol).naturally_reductive());

      // Pairwise-distinct parameters, separated by more than 10 tol.
      std::array<double, 6> x{};
      const double base = g.real(0.1, 5);
      for (std::size_t i = 0; i < 6; ++i) x[i] = base * std::pow(1.0 + 20 * tol + g.real(0, 0.5), static_cast<double>(i));
      std::array<std::size_t, 6> perm{0, 1, 2, 3, 4, 5};
      std::shuffle(perm.begin(), perm.end(), g.engine());
      MetricParams<double> m;
      for (std::size_t i = 0; i < 6; ++i) m[kModules[i]] = x[perm[i]];
      CHECK(classify_reductive(m, tol).case_matched == ReductiveCase::none);
      auto scaled = m;
      for (auto mod : kModules) scaled[mod] *= 123.0;
      CHECK(classify_reductive(scaled, tol).case_matched == ReductiveCase::none);
    }
  }
}
