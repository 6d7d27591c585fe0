#include "soeinstein/lie/triple_products.hpp"

#include <algorithm>
#include <iomanip>

namespace soe::lie {

namespace {

struct SlotTable {
  std::array<std::size_t, 216> slot{};
  std::array<std::array<Module, 3>, TripleProducts::kCount> triple{};

  SlotTable() {
    std::size_t next = 0;
    for (std::size_t i = 0; i < 6; ++i) {
      for (std::size_t j = i; j < 6; ++j) {
        for (std::size_t k = j; k < 6; ++k) {
          triple[next] = {kModules[i], kModules[j], kModules[k]};
          std::array<std::size_t, 3> p = {i, j, k};
          do {
            slot[p[0] * 36 + p[1] * 6 + p[2]] = next;
          } while (std::next_permutation(p.begin(), p.end()));
          ++next;
        }
      }
    }
  }
};

const SlotTable& slots() {
  static const SlotTable table;
  return table;
}

bool canonical(std::size_t a, std::size_t b, std::size_t c) { return a <= b && b <= c; }

}  // namespace

std::size_t TripleProducts::slot(Module a, Module b, Module c) {
  return slots().slot[index(a) * 36 + index(b) * 6 + index(c)];
}

std::vector<TripleProducts::Entry> TripleProducts::entries() const {
  std::vector<Entry> out;
  out.reserve(kCount);
  for (std::size_t s = 0; s < kCount; ++s) {
    const auto& t = slots().triple[s];
    out.push_back({t[0], t[1], t[2], values_[s]});
  }
  return out;
}

TripleProducts triple_products(const GroupSpec& spec) {
  const LieBasis basis(spec);
  TripleProducts tp;
  // Each unordered triple is summed once, over the canonical ordering of
  // its labels; symmetry supplies the other orderings.
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const std::size_t mi = index(basis[i].module);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const std::size_t mj = index(basis[j].module);
      if (mj < mi) continue;
      for (const auto& [g, a] : bracket(basis, i, j)) {
        const std::size_t mg = index(basis[g].module);
        if (canonical(mi, mj, mg)) tp.at(basis[i].module, basis[j].module, basis[g].module) += a * a;
      }
    }
  }
  return tp;
}

std::vector<DenseElement> dense_basis(const LieBasis& basis) {
  std::vector<DenseElement> out;
  out.reserve(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) out.push_back({basis.matrix(i), basis[i].module});
  return out;
}

TripleProducts triple_products(const GroupSpec& spec, const std::vector<DenseElement>& basis) {
  const int n = spec.n();
  const auto dim = static_cast<Eigen::Index>(basis.size());
  // Row g holds vec(e_g^T), so (G vec(M))_g = tr(M e_g).
  Eigen::MatrixXd g(dim, n * n);
  for (Eigen::Index r = 0; r < dim; ++r) {
    const Eigen::MatrixXd t = basis[static_cast<std::size_t>(r)].matrix.transpose();
    g.row(r) = Eigen::Map<const Eigen::VectorXd>(t.data(), n * n).transpose();
  }
  TripleProducts tp;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const std::size_t mi = index(basis[i].module);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const std::size_t mj = index(basis[j].module);
      if (mj < mi) continue;
      const Eigen::MatrixXd comm = basis[i].matrix * basis[j].matrix - basis[j].matrix * basis[i].matrix;
      const Eigen::VectorXd coords = -(n - 2) * (g * Eigen::Map<const Eigen::VectorXd>(comm.data(), n * n));
      for (Eigen::Index r = 0; r < dim; ++r) {
        const std::size_t mg = index(basis[static_cast<std::size_t>(r)].module);
        if (canonical(mi, mj, mg)) {
          tp.at(basis[i].module, basis[j].module, basis[static_cast<std::size_t>(r)].module) += coords(r) * coords(r);
        }
      }
    }
  }
  return tp;
}

void write_triple_products_csv(std::ostream& out, const TripleProducts& tp) {
  const auto old_flags = out.flags();
  const auto old_precision = out.precision();
  out << std::setprecision(17);
  for (const auto& e : tp.entries()) {
    out << label(e.i) << ',' << label(e.j) << ',' << label(e.k) << ',' << e.value << '\n';
  }
  out.flags(old_flags);
  out.precision(old_precision);
}

}  // namespace soe::lie
