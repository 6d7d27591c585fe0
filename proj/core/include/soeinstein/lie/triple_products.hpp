#pragma once

#include <Eigen/Dense>

#include <array>
#include <ostream>
#include <vector>

#include "soeinstein/lie/basis.hpp"
#include "soeinstein/lie/group_spec.hpp"

namespace soe::lie {

// (ijk) = sum of squared structure constants between modules i, j, k. Fully
// symmetric, so one value per unordered triple (56 of them).
class TripleProducts {
 public:
  static constexpr std::size_t kCount = 56;

  double operator()(Module a, Module b, Module c) const { return values_[slot(a, b, c)]; }
  double& at(Module a, Module b, Module c) { return values_[slot(a, b, c)]; }

  struct Entry {
    Module i, j, k;
    double value;
  };
  // Unordered triples in canonical order (i <= j <= k).
  std::vector<Entry> entries() const;

  static std::size_t slot(Module a, Module b, Module c);

 private:
  std::array<double, kCount> values_{};
};

TripleProducts triple_products(const GroupSpec& spec);

// A module-adapted orthonormal basis given by explicit matrices, e.g. after
// rotating the standard basis inside one module.
struct DenseElement {
  Eigen::MatrixXd matrix;
  Module module;
};
std::vector<DenseElement> dense_basis(const LieBasis& basis);
TripleProducts triple_products(const GroupSpec& spec, const std::vector<DenseElement>& basis);

// Rows "i,j,k,value" with module labels 1, 2, 3, 12, 13, 23.
void write_triple_products_csv(std::ostream& out, const TripleProducts& tp);

}  // namespace soe::lie
