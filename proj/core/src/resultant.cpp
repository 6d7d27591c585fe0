#include "soeinstein/poly/resultant.hpp"

#include <utility>

#include "soeinstein/error.hpp"

namespace soe::poly {

PolyMatrix sylvester_matrix(const BiPoly& f, const BiPoly& g, Var eliminate) {
  if (f.vars() != g.vars() && !f.is_zero() && !g.is_zero()) {
    throw Error(ErrorCode::invalid_argument, "resultant operands use different variables");
  }
  const std::size_t idx = f.index_of(eliminate);
  const Var survivor = f.vars()[1 - idx];
  const std::vector<UniPoly> fc = f.coefficients_in(idx);
  const std::vector<UniPoly> gc = g.coefficients_in(idx);
  const int m = static_cast<int>(fc.size()) - 1;
  const int n = static_cast<int>(gc.size()) - 1;
  if (m < 1 || n < 1) throw Error(ErrorCode::nothing_to_eliminate, "nothing to eliminate");

  const auto size = static_cast<std::size_t>(m + n);
  PolyMatrix s(size, std::vector<UniPoly>(size, UniPoly(survivor)));
  // Rows 0..n-1 carry shifted copies of f, rows n..n+m-1 of g, highest power first.
  for (int row = 0; row < n; ++row) {
    for (int j = 0; j <= m; ++j) s[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + j)] = fc[static_cast<std::size_t>(m - j)];
  }
  for (int row = 0; row < m; ++row) {
    for (int j = 0; j <= n; ++j) {
      s[static_cast<std::size_t>(n + row)][static_cast<std::size_t>(row + j)] = gc[static_cast<std::size_t>(n - j)];
    }
  }
  return s;
}

UniPoly bareiss_determinant(PolyMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return UniPoly::constant(BigRational(1));
  const Var v = m[0][0].var();
  UniPoly prev = UniPoly::constant(BigRational(1), v);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k].is_zero()) ++swap;
      if (swap == n) return UniPoly(v);
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Sylvester's identity guarantees the division is exact.
        m[i][j] = divide_exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      }
      m[i][k] = UniPoly(v);
    }
    prev = m[k][k];
  }
  UniPoly det = m[n - 1][n - 1];
  if (sign < 0) det = -det;
  return det;
}

UniPoly resultant(const BiPoly& f, const BiPoly& g, Var eliminate) {
  UniPoly r = bareiss_determinant(sylvester_matrix(f, g, eliminate));
  r.set_var(f.vars()[1 - f.index_of(eliminate)]);
  return r;
}

}  // namespace soe::poly
