#include <Eigen/Dense>
#include <cmath>
#include <map>
#include <sstream>

#include "doctest.h"
#include "generators.hpp"
#include "soeinstein/error.hpp"
#include "soeinstein/lie/basis.hpp"
#include "soeinstein/lie/ricci_general.hpp"
#include "soeinstein/lie/triple_products.hpp"
#include "soeinstein/ricci/ricci_closed.hpp"

using soe::Error;
using soe::ErrorCode;
using namespace soe::lie;

namespace {

// Independent brute force: explicit skew matrices, commutators, and
// projection with -B(X, Y) = -(n - 2) tr(XY), summing squared coefficients
// over ordered triples of basis elements.
struct BruteForce {
  std::map<std::array<int, 3>, double> table;  // sorted module indices

  explicit BruteForce(int k1, int k2, int k3) {
    const int n = k1 + k2 + k3;
    auto block = [&](int i) { return i < k1 ? 0 : (i < k1 + k2 ? 1 : 2); };
    auto module = [&](int a, int b) {
      const int x = std::min(block(a), block(b)), y = std::max(block(a), block(b));
      if (x == y) return x;
      return x == 0 ? (y == 1 ? 3 : 4) : 5;
    };
    std::vector<Eigen::MatrixXd> mats;
    std::vector<int> mods;
    const double s = 1.0 / std::sqrt(2.0 * (n - 2));
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
        m(a, b) = s;
        m(b, a) = -s;
        mats.push_back(m);
        mods.push_back(module(a, b));
      }
    }
    for (std::size_t i = 0; i < mats.size(); ++i) {
      for (std::size_t j = 0; j < mats.size(); ++j) {
        const Eigen::MatrixXd c = mats[i] * mats[j] - mats[j] * mats[i];
        if (c.isZero()) continue;
        for (std::size_t g = 0; g < mats.size(); ++g) {
          const double coef = -(n - 2) * (c * mats[g]).trace();
          if (coef == 0.0) continue;
          std::array<int, 3> key{mods[i], mods[j], mods[g]};
          std::sort(key.begin(), key.end());
          table[key] += coef * coef;
        }
      }
    }
  }

  // Unordered-triple value (ijk) for distinct-label multiplicity handled by the
  // caller: the ordered sum counts each permutation of module labels.
  double ordered_sum(std::array<int, 3> key) const {
    std::sort(key.begin(), key.end());
    auto it = table.find(key);
    return it == table.end() ? 0.0 : it->second;
  }
};

int permutations(std::array<int, 3> k) {
  std::sort(k.begin(), k.end());
  if (k[0] == k[2]) return 1;
  if (k[0] == k[1] || k[1] == k[2]) return 3;
  return 6;
}

}  // namespace

TEST_CASE("group spec validation and dimensions") {
  CHECK_THROWS_AS(GroupSpec(1, 3, 4), Error);
  CHECK_THROWS_AS(GroupSpec(2, 2, 2), Error);
  const GroupSpec s(3, 3, 4);
  CHECK(s.n() == 10);
  CHECK(s.dims() == std::array<int, 6>{3, 3, 6, 9, 12, 12});
  for (int a = 2; a <= 8; ++a) {
    for (int b = 2; b <= 8; ++b) {
      for (int c = 2; c <= 8; ++c) {
        if (a + b + c < 7) continue;
        const GroupSpec g(a, b, c);
        int sum = 0;
        for (int d : g.dims()) sum += d;
        CHECK(sum == g.total_dim());
      }
    }
  }
}

TEST_CASE("basis sizes per module") {
  const LieBasis b7 = build_basis(GroupSpec(2, 2, 3));
  CHECK(b7.size() == 21);
  const std::array<std::size_t, 6> sizes7{1, 1, 3, 4, 6, 6};
  for (auto m : kModules) CHECK(b7.module_size(m) == sizes7[index(m)]);
  const LieBasis b10 = build_basis(GroupSpec(3, 3, 4));
  CHECK(b10.size() == 45);
  const std::array<std::size_t, 6> sizes10{3, 3, 6, 9, 12, 12};
  for (auto m : kModules) CHECK(b10.module_size(m) == sizes10[index(m)]);
}

TEST_CASE("basis is -B orthonormal") {
  const GroupSpec spec(3, 3, 4);
  const LieBasis b = build_basis(spec);
  for (std::size_t i = 0; i < b.size(); ++i) {
    CHECK(std::abs(neg_killing(b.matrix(i), b.matrix(i), spec.n()) - 1.0) <= 1e-14);
    for (std::size_t j = i + 1; j < b.size(); ++j) CHECK(std::abs(neg_killing(b.matrix(i), b.matrix(j), spec.n())) <= 1e-14);
  }
}

TEST_CASE("bracket basics") {
  const GroupSpec spec(3, 3, 4);
  const LieBasis b = build_basis(spec);
  for (std::size_t i = 0; i < b.size(); ++i) CHECK(bracket(b, i, i).empty());
  // [F01, F12] = F02, so the normalized coefficient is 1/sqrt(2(n-2)).
  const auto c = bracket(b, b.index_of(0, 1), b.index_of(1, 2));
  REQUIRE(c.size() == 1);
  CHECK(c.begin()->first == b.index_of(0, 2));
  CHECK(c.begin()->second == doctest::Approx(1.0 / std::sqrt(16.0)).epsilon(1e-15));
  soe::test::Gen g(81);
  for (int t = 0; t < 100; ++t) {
    const auto i = static_cast<std::size_t>(g.integer(0, 44)), j = static_cast<std::size_t>(g.integer(0, 44));
    auto ij = bracket(b, i, j);
    for (const auto& [k, v] : bracket(b, j, i)) ij[k] += v;
    for (const auto& [k, v] : ij) CHECK(std::abs(v) <= 1e-15);
  }
}

TEST_CASE("bracket agrees with the matrix commutator") {
  const GroupSpec spec(2, 3, 4);
  const LieBasis b = build_basis(spec);
  soe::test::Gen g(83);
  for (int t = 0; t < 100; ++t) {
    const auto i = static_cast<std::size_t>(g.integer(0, static_cast<long>(b.size()) - 1));
    const auto j = static_cast<std::size_t>(g.integer(0, static_cast<long>(b.size()) - 1));
    Eigen::MatrixXd expect = b.matrix(i) * b.matrix(j) - b.matrix(j) * b.matrix(i);
    Eigen::MatrixXd got = Eigen::MatrixXd::Zero(spec.n(), spec.n());
    for (const auto& [k, v] : bracket(b, i, j)) got += v * b.matrix(k);
    CHECK((expect - got).norm() <= 1e-14);
  }
}

TEST_CASE("Jacobi identity on random triples") {
  const GroupSpec spec(3, 3, 4);
  const LieBasis b = build_basis(spec);
  auto nested = [&](std::size_t x, std::size_t y, std::size_t z) {
    Coefficients out;
    for (const auto& [k, v] : bracket(b, y, z)) {
      for (const auto& [m, w] : bracket(b, x, k)) out[m] += v * w;
    }
    return out;
  };
  soe::test::Gen g(89);
  for (int t = 0; t < 200; ++t) {
    const auto x = static_cast<std::size_t>(g.integer(0, 44));
    const auto y = static_cast<std::size_t>(g.integer(0, 44));
    const auto z = static_cast<std::size_t>(g.integer(0, 44));
    Coefficients sum = nested(x, y, z);
    for (const auto& [k, v] : nested(y, z, x)) sum[k] += v;
    for (const auto& [k, v] : nested(z, x, y)) sum[k] += v;
    for (const auto& [k, v] : sum) CHECK(std::abs(v) <= 1e-12);
  }
}

TEST_CASE("triple products match the brute-force sum") {
  for (auto [k1, k2, k3] : {std::array<int, 3>{2, 2, 3}, {3, 3, 4}, {2, 3, 4}}) {
    const GroupSpec spec(k1, k2, k3);
    const TripleProducts tp = triple_products(spec);
    const BruteForce bf(k1, k2, k3);
    for (const auto& e : tp.entries()) {
      const std::array<int, 3> key{static_cast<int>(index(e.i)), static_cast<int>(index(e.j)),
                                   static_cast<int>(index(e.k))};
      CHECK(e.value == doctest::Approx(bf.ordered_sum(key) / permutations(key)).epsilon(1e-12));
      CHECK(e.value >= 0.0);
    }
  }
}

TEST_CASE("triple products on (3, 3, 4)") {
  const GroupSpec spec(3, 3, 4);
  const TripleProducts tp = triple_products(spec);
  const double nm2 = spec.n() - 2;
  // k1 k2 k3 / (2(n - 2))
  CHECK(tp(Module::m12, Module::m13, Module::m23) == doctest::Approx(36.0 / (2 * nm2)).epsilon(1e-13));
  CHECK(tp(Module::m12, Module::m13, Module::m23) == doctest::Approx(2.25));
  CHECK(tp(Module::m1, Module::m23, Module::m12) == 0.0);
  CHECK(tp(Module::m1, Module::m2, Module::m3) == 0.0);
  CHECK(tp(Module::m1, Module::m1, Module::m1) == doctest::Approx(3.0 * 2 * 1 / (2 * nm2)).epsilon(1e-13));
  CHECK(tp(Module::m3, Module::m13, Module::m13) == doctest::Approx(4.0 * 3 * 3 / (2 * nm2)).epsilon(1e-13));
  const double v = tp(Module::m12, Module::m13, Module::m23);
  CHECK(tp(Module::m23, Module::m12, Module::m13) == v);
  CHECK(tp(Module::m13, Module::m23, Module::m12) == v);
}

TEST_CASE("triple products are basis independent within a module") {
  const GroupSpec spec(3, 3, 4);
  const LieBasis basis = build_basis(spec);
  const TripleProducts ref = triple_products(spec);
  soe::test::Gen g(97);
  for (auto target : kModules) {
    auto dense = dense_basis(basis);
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < dense.size(); ++i) {
      if (dense[i].module == target) members.push_back(i);
    }
    const auto d = static_cast<Eigen::Index>(members.size());
    Eigen::MatrixXd r(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
      for (Eigen::Index j = 0; j < d; ++j) r(i, j) = g.real(-1, 1);
    }
    const Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(r).householderQ();
    std::vector<Eigen::MatrixXd> rotated;
    for (Eigen::Index i = 0; i < d; ++i) {
      Eigen::MatrixXd m = Eigen::MatrixXd::Zero(spec.n(), spec.n());
      for (Eigen::Index j = 0; j < d; ++j) m += q(i, j) * dense[members[static_cast<std::size_t>(j)]].matrix;
      rotated.push_back(m);
    }
    for (Eigen::Index i = 0; i < d; ++i) dense[members[static_cast<std::size_t>(i)]].matrix = rotated[static_cast<std::size_t>(i)];
    const TripleProducts tp = triple_products(spec, dense);
    for (const auto& e : ref.entries()) CHECK(std::abs(tp(e.i, e.j, e.k) - e.value) <= 1e-10);
  }
}

TEST_CASE("triple product csv export") {
  std::ostringstream os;
  write_triple_products_csv(os, triple_products(GroupSpec(3, 3, 4)));
  const std::string s = os.str();
  CHECK(std::count(s.begin(), s.end(), '\n') >= 56);
  CHECK(s.find("12,13,23,2.25") != std::string::npos);
}

TEST_CASE("general Ricci formula") {
  const GroupSpec spec(3, 3, 4);
  const TripleProducts tp = triple_products(spec);
  const auto r = ricci_general(spec, tp, {1, 1, 1, 1, 1, 1});
  for (auto m : kModules) CHECK(r[m] == doctest::Approx(0.25).epsilon(1e-14));

  soe::test::Gen g(101);
  for (int t = 0; t < 20; ++t) {
    const auto x = g.metric();
    auto cx = x;
    for (auto m : kModules) cx[m] *= 3.0;
    const auto a = ricci_general(spec, tp, x);
    const auto b = ricci_general(spec, tp, cx);
    for (auto m : kModules) CHECK(b[m] == doctest::Approx(a[m] / 3.0).epsilon(1e-13));
  }
  try {
    (void)ricci_general(spec, tp, {1, 1, 0, 1, 1, 1});
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::degenerate_metric);
  }
}

TEST_CASE("general and closed-form Ricci components agree") {
  soe::test::Gen g(103);
  for (auto [k1, k2, k3] : {std::array<int, 3>{2, 2, 3}, {3, 3, 4}, {3, 3, 5}, {4, 4, 5}}) {
    const GroupSpec spec(k1, k2, k3);
    const TripleProducts tp = triple_products(spec);
    for (int t = 0; t < 50; ++t) {
      const auto x = g.metric();
      const auto a = ricci_general(spec, tp, x);
      const auto b = soe::ricci::ricci_closed(spec, x);
      for (auto m : kModules) CHECK(std::abs(a[m] - b[m]) <= 1e-9);
    }
  }
}

TEST_CASE("block swap symmetry when k1 = k2") {
  const GroupSpec spec(3, 3, 5);
  const TripleProducts tp = triple_products(spec);
  soe::test::Gen g(107);
  for (int t = 0; t < 20; ++t) {
    const auto x = g.metric();
    auto y = x;
    std::swap(y.x1, y.x2);
    std::swap(y.x13, y.x23);
    const auto a = ricci_general(spec, tp, x);
    const auto b = ricci_general(spec, tp, y);
    CHECK(std::abs(a.r1 - b.r2) <= 1e-12);
    CHECK(std::abs(a.r2 - b.r1) <= 1e-12);
    CHECK(std::abs(a.r13 - b.r23) <= 1e-12);
    CHECK(std::abs(a.r23 - b.r13) <= 1e-12);
    CHECK(std::abs(a.r3 - b.r3) <= 1e-12);
    CHECK(std::abs(a.r12 - b.r12) <= 1e-12);
  }
}
