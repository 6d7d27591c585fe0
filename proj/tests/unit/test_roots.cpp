#include <cmath>
#include <limits>

#include "doctest.h"
#include "generators.hpp"
#include "soeinstein/error.hpp"
#include "soeinstein/poly/roots.hpp"
#include "soeinstein/solver/elimination.hpp"
#include "soeinstein/solver/system.hpp"

using soe::Error;
using soe::ErrorCode;
using soe::poly::BigRational;
using soe::poly::UniPoly;
namespace poly = soe::poly;

namespace {

UniPoly P(std::vector<long> c) {
  std::vector<BigRational> q(c.begin(), c.end());
  return UniPoly(q);
}

// Published h at (k, l) = (3, 4).
UniPoly h34() {
  const auto& d = soe::solver::default_coefficient_data();
  return poly::to_unipoly(poly::specialize_trailing<1>(d.h, std::array<BigRational, 2>{BigRational(3), BigRational(4)}));
}

// Plain floating bisection used as an independent reference.
double bisect(const UniPoly& p, double lo, double hi) {
  double flo = p.eval(lo);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = p.eval(mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("sturm count of x^2 - 2 on (1, 2)") {
  CHECK(poly::sturm_count(P({-2, 0, 1}), BigRational(1), BigRational(2)) == 1);
}

TEST_CASE("sturm count of x^2 + 1 on (-10, 10)") {
  CHECK(poly::sturm_count(P({1, 0, 1}), BigRational(-10), BigRational(10)) == 0);
}

TEST_CASE("sturm count excludes roots on the endpoints") {
  const UniPoly p = P({-1, 0, 1});
  CHECK(poly::sturm_count(p, BigRational(-1), BigRational(1)) == 0);
  CHECK(poly::sturm_count(p, BigRational(-1), BigRational(2)) == 1);
  CHECK(poly::sturm_count(p, BigRational(-2), BigRational(2)) == 2);
}

TEST_CASE("sturm sequence rejects a repeated root") {
  try {
    (void)poly::sturm_count(P({1, -2, 1}), BigRational(0), BigRational(2));
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_squarefree);
  }
}

TEST_CASE("h at (3, 4) has a root in (0, 1)") {
  CHECK(poly::sturm_count(h34(), BigRational(0), BigRational(1)) >= 1);
}

TEST_CASE("isolating the roots of x^2 - 2 on (-2, 2)") {
  const auto ivs = poly::isolate_roots(P({-2, 0, 1}), BigRational(-2), BigRational(2));
  REQUIRE(ivs.size() == 2);
  CHECK(ivs[0].lo >= BigRational(-2));
  CHECK(ivs[0].hi <= BigRational(0));
  CHECK(ivs[1].lo >= BigRational(0));
  CHECK(ivs[1].hi <= BigRational(2));
  CHECK(poly::isolate_roots(P({1, 0, 1}), BigRational(-5), BigRational(5)).empty());
}

TEST_CASE("isolating the positive roots of h at (3, 4)") {
  const UniPoly h = poly::squarefree_part(h34());
  const auto ivs = poly::isolate_roots(h, BigRational(0), poly::root_search_bound(h));
  REQUIRE(ivs.size() >= 2);
  // Each interval holds exactly one root; the first lies below 1, the last above.
  CHECK(poly::sturm_count(h, ivs.front().lo, min(ivs.front().hi, BigRational(1))) == 1);
  CHECK(poly::sturm_count(h, max(ivs.back().lo, BigRational(1)), ivs.back().hi + BigRational(1)) == 1);
}

TEST_CASE("refining sqrt 2") {
  const UniPoly p = P({-2, 0, 1});
  const auto ivs = poly::isolate_roots(p, BigRational(1), BigRational(2));
  REQUIRE(ivs.size() == 1);
  const auto r = poly::refine_root(p, ivs[0], {1e-12, 3});
  CHECK(r.value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(r.relative_width <= 1e-12);
  CHECK(r.contains(BigRational::from_double(r.value)));
  CHECK(r.certified_lo * r.certified_lo < BigRational(2));
  CHECK(r.certified_hi * r.certified_hi > BigRational(2));
}

TEST_CASE("an exact rational root is detected") {
  const UniPoly p = UniPoly::linear_root(BigRational(3, 7));
  const auto r = poly::refine_root(p, {BigRational(0), BigRational(1), -1}, {1e-12, 3});
  CHECK(r.exact());
  CHECK(r.certified_lo == BigRational(3, 7));
  const UniPoly q = p * P({-5, 0, 1});
  const auto ivs = poly::isolate_roots(q, BigRational(0), BigRational(2));
  REQUIRE(ivs.size() == 1);
  const auto rq = poly::refine_root(q, ivs[0], {1e-12, 3});
  CHECK(rq.exact());
  CHECK(rq.certified_hi == BigRational(3, 7));
}

TEST_CASE("refined root of h in (0, 1) agrees with floating bisection") {
  const UniPoly h = poly::squarefree_part(h34());
  const auto ivs = poly::isolate_roots(h, BigRational(0), BigRational(1));
  REQUIRE(ivs.size() == 1);
  const auto r = poly::refine_root(h, ivs[0], {1e-12, 3});
  const double ref = bisect(h, ivs[0].lo.to_double(), ivs[0].hi.to_double());
  CHECK(std::abs(r.value - ref) <= 1e-12 * ref);
  CHECK(r.value == doctest::Approx(0.749675581670013).epsilon(1e-12));
  // |h(value)| is bounded by the slope times the certified width.
  const double slope = std::abs(h.derivative().eval(r.value));
  const double width = (r.certified_hi - r.certified_lo).to_double();
  CHECK(std::abs(h.eval(r.value)) <= 2 * slope * width + 1e-9 * h.max_abs_coeff().to_double());
}

TEST_CASE("refinement requires a sign change") {
  CHECK_THROWS_AS(poly::refine_root(P({1, 0, 1}), {BigRational(0), BigRational(1), 1}, {}), Error);
}

TEST_CASE("property: isolation count equals the Sturm count") {
  soe::test::Gen g(41);
  for (int trial = 0; trial < 40; ++trial) {
    UniPoly p = g.split_squarefree(static_cast<int>(g.integer(1, 6))) * P({1, 0, 1});
    if (g.integer(0, 1) == 1) p *= P({-3, 0, 1});
    const BigRational lo(-11), hi(11);
    const auto ivs = poly::isolate_roots(p, lo, hi);
    CHECK(static_cast<int>(ivs.size()) == poly::sturm_count(p, lo, hi));
    for (std::size_t i = 0; i + 1 < ivs.size(); ++i) CHECK(ivs[i].hi <= ivs[i + 1].lo);
    for (const auto& iv : ivs) {
      CHECK(iv.lo < iv.hi);
      const int count_open = poly::sturm_count(p, iv.lo, iv.hi);
      const int at_hi = p.sign_at(iv.hi) == 0 ? 1 : 0;
      CHECK(count_open + at_hi == 1);
    }
  }
}

// Once the bracket is narrower than the distance from the root to the nearest
// critical point, p is monotone on it and min(|p(lo)|, |p(hi)|) cannot grow.
TEST_CASE("property: certified bracket always holds the root and |p| shrinks") {
  soe::test::Gen g(43);
  for (int trial = 0; trial < 30; ++trial) {
    // Irrational roots so refinement runs its full course.
    const long a = g.integer(2, 50);
    const UniPoly p = P({-a, 0, 1}) * P({-(a + 1), 0, 1}) * P({-7, 0, 0, 1});
    const UniPoly sf = poly::squarefree_part(p);
    for (const auto& iv : poly::isolate_roots(sf, BigRational(0), poly::root_search_bound(sf))) {
      std::vector<BigRational> trace;
      const auto r = poly::refine_root_traced(sf, iv, {1e-12, 3}, trace);
      if (r.exact()) continue;
      CHECK(sf.sign_at(r.certified_lo) * sf.sign_at(r.certified_hi) <= 0);
      CHECK(r.certified_lo <= BigRational::from_double(r.value));
      CHECK(BigRational::from_double(r.value) <= r.certified_hi);
      CHECK(r.relative_width <= 1e-12);
      const UniPoly dp = poly::squarefree_part(sf.derivative());
      double gap = std::numeric_limits<double>::infinity();
      if (dp.degree() >= 1) {
        const BigRational b = poly::root_search_bound(dp) + poly::root_search_bound(sf);
        for (const auto& civ : poly::isolate_roots(dp, -b, b)) {
          gap = std::min(gap, std::abs(poly::refine_root(dp, civ, {1e-9, 0}).value - r.value));
        }
      }
      double width = (iv.hi - iv.lo).to_double();
      for (std::size_t i = 1; i < trace.size(); ++i) {
        width /= 2;
        if (width < 0.5 * gap) CHECK(trace[i] <= trace[i - 1]);
      }
    }
  }
}

TEST_CASE("descartes signs") {
  CHECK(poly::descartes_signs(P({1, -2, 1})) == std::vector<int>{1, -1, 1});
  CHECK(poly::descartes_signs(UniPoly()).empty());
  CHECK(poly::sign_variations({1, -1, 0, 1}) == 2);
}

TEST_CASE("property: alternating signs leave no negative roots") {
  soe::test::Gen g(47);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = static_cast<int>(g.integer(1, 8));
    std::vector<BigRational> c;
    for (int i = 0; i <= d; ++i) c.emplace_back(g.integer(1, 30) * (i % 2 == 0 ? 1 : -1), g.integer(1, 5));
    const UniPoly p(c);
    const UniPoly sf = poly::squarefree_part(p);
    if (sf.degree() < 1) continue;
    const BigRational bound = poly::root_search_bound(sf);
    CHECK(poly::isolate_roots(sf, -bound, BigRational(0)).empty());
    CHECK(poly::sign_variations(poly::descartes_signs(p)) == d);
  }
}

TEST_CASE("cauchy bound contains all real roots") {
  soe::test::Gen g(53);
  for (int trial = 0; trial < 30; ++trial) {
    const UniPoly p = g.split_squarefree(static_cast<int>(g.integer(1, 5)));
    const BigRational b = poly::cauchy_bound(p);
    CHECK(poly::sturm_count(p, -b, b) == p.degree());
  }
}

TEST_CASE("interval enclosure contains pointwise values") {
  soe::test::Gen g(59);
  for (int trial = 0; trial < 30; ++trial) {
    const UniPoly p = g.unipoly(6);
    BigRational lo = g.rational(), hi = g.rational();
    if (hi < lo) std::swap(lo, hi);
    const auto e = poly::eval_enclosure(p, lo, hi);
    for (int i = 0; i <= 10; ++i) {
      const BigRational x = lo + (hi - lo) * BigRational(i, 10);
      const BigRational v = p.eval(x);
      CHECK(e.lo <= v);
      CHECK(v <= e.hi);
    }
  }
}
