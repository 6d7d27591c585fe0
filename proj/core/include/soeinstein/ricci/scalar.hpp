#pragma once

// Scalar adaptors letting the closed-form Ricci formulas run over doubles,
// exact rationals, and (Laurent) polynomials with the same source.

#include "soeinstein/poly/rational.hpp"
#include "soeinstein/poly/sparse_poly.hpp"

namespace soe::ricci {

inline double lift(const double&, const poly::BigRational& v) { return v.to_double(); }
inline poly::BigRational lift(const poly::BigRational&, const poly::BigRational& v) { return v; }
template <std::size_t N>
poly::SparsePoly<N> lift(const poly::SparsePoly<N>& like, const poly::BigRational& v) {
  return poly::SparsePoly<N>(like.vars(), v);
}

inline bool is_positive(const double& v) { return v > 0.0; }
inline bool is_positive(const poly::BigRational& v) { return v.sign() > 0; }
// Symbolic parameters stand for positive indeterminates; only a constant
// can be checked.
template <std::size_t N>
bool is_positive(const poly::SparsePoly<N>& p) {
  if (p.is_zero()) return false;
  if (p.size() == 1 && p.terms().begin()->first == typename poly::SparsePoly<N>::Exponents{}) {
    return p.terms().begin()->second.sign() > 0;
  }
  return true;
}

}  // namespace soe::ricci
