#include "soeinstein/lie/basis.hpp"

#include <algorithm>
#include <cmath>

#include "soeinstein/error.hpp"

namespace soe::lie {

LieBasis::LieBasis(const GroupSpec& spec) : spec_(spec) {
  const int n = spec.n();
  const double norm = 1.0 / std::sqrt(2.0 * (n - 2));
  for (Module m : kModules) {
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (module_for_blocks(spec.block_of(a), spec.block_of(b)) == m) elements_.push_back({a, b, m, norm});
      }
    }
  }
  lookup_.assign(static_cast<std::size_t>(n * n), elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const auto& e = elements_[i];
    lookup_[static_cast<std::size_t>(e.row * n + e.col)] = i;
    lookup_[static_cast<std::size_t>(e.col * n + e.row)] = i;
  }
}

std::size_t LieBasis::index_of(int a, int b) const {
  const int n = spec_.n();
  if (a == b || a < 0 || b < 0 || a >= n || b >= n) {
    throw Error(ErrorCode::invalid_argument, "no basis element on the diagonal or outside the matrix");
  }
  return lookup_[static_cast<std::size_t>(a * n + b)];
}

std::size_t LieBasis::module_size(Module m) const {
  return static_cast<std::size_t>(std::count_if(elements_.begin(), elements_.end(),
                                                [m](const BasisElement& e) { return e.module == m; }));
}

Eigen::MatrixXd LieBasis::matrix(std::size_t i) const {
  const auto& e = elements_.at(i);
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(spec_.n(), spec_.n());
  x(e.row, e.col) = e.norm_factor;
  x(e.col, e.row) = -e.norm_factor;
  return x;
}

LieBasis build_basis(const GroupSpec& spec) { return LieBasis(spec); }

double neg_killing(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y, int n) {
  return -(n - 2) * (x * y).trace();
}

namespace {

// Adds scale * F_ab (F_ab = E_ab - E_ba) in basis coordinates. The element
// on the pair is s_g * F_min,max.
void add_skew(const LieBasis& basis, Coefficients& out, int a, int b, double scale) {
  if (a == b) return;
  const std::size_t g = basis.index_of(a, b);
  const double oriented = a < b ? scale : -scale;
  out[g] += oriented / basis[g].norm_factor;
}

}  // namespace

Coefficients bracket(const LieBasis& basis, std::size_t i, std::size_t j) {
  const BasisElement& x = basis[i];
  const BasisElement& y = basis[j];
  const int a = x.row, b = x.col, c = y.row, d = y.col;
  const double s = x.norm_factor * y.norm_factor;
  Coefficients out;
  // [F_ab, F_cd] = d_bc F_ad - d_bd F_ac - d_ac F_bd + d_ad F_bc
  if (b == c) add_skew(basis, out, a, d, s);
  if (b == d) add_skew(basis, out, a, c, -s);
  if (a == c) add_skew(basis, out, b, d, -s);
  if (a == d) add_skew(basis, out, b, c, s);
  std::erase_if(out, [](const auto& kv) { return kv.second == 0.0; });
  return out;
}

}  // namespace soe::lie
