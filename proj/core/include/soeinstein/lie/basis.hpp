#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <map>
#include <vector>

#include "soeinstein/lie/group_spec.hpp"

namespace soe::lie {

// norm_factor * (E_row,col - E_col,row), row < col.
struct BasisElement {
  int row = 0;
  int col = 0;
  Module module = Module::m1;
  double norm_factor = 1.0;
};

// (-B)-orthonormal basis of so(n) adapted to the six-module decomposition,
// with B(X, Y) = (n - 2) tr(XY). Elements are grouped by module in the order
// m1, m2, m3, m12, m13, m23 and lexicographically by (row, col) inside.
class LieBasis {
 public:
  explicit LieBasis(const GroupSpec& spec);

  const GroupSpec& spec() const { return spec_; }
  std::size_t size() const { return elements_.size(); }
  const BasisElement& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<BasisElement>& elements() const { return elements_; }
  // Index of the element on the skew pair (a, b), a != b.
  std::size_t index_of(int a, int b) const;
  std::size_t module_size(Module m) const;

  Eigen::MatrixXd matrix(std::size_t i) const;

 private:
  GroupSpec spec_;
  std::vector<BasisElement> elements_;
  std::vector<std::size_t> lookup_;  // n*n table, row-major
};

LieBasis build_basis(const GroupSpec& spec);

// -B(X, Y) = -(n - 2) tr(XY).
double neg_killing(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y, int n);

using Coefficients = std::map<std::size_t, double>;

// Structure constants: [e_i, e_j] = sum_g A^g e_g.
Coefficients bracket(const LieBasis& basis, std::size_t i, std::size_t j);

}  // namespace soe::lie
