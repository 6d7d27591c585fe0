#pragma once

#include <ostream>
#include <utility>
#include <vector>

#include "soeinstein/poly/rational.hpp"
#include "soeinstein/poly/var.hpp"

namespace soe::poly {

// Dense univariate polynomial over Q, coefficients by ascending degree.
// The zero polynomial has no coefficients and degree -1.
class UniPoly {
 public:
  explicit UniPoly(Var var = Var::x12) : var_(var) {}
  UniPoly(std::vector<BigRational> coeffs, Var var = Var::x12);

  static UniPoly constant(const BigRational& c, Var var = Var::x12);
  static UniPoly monomial(const BigRational& c, int degree, Var var = Var::x12);
  // x - root
  static UniPoly linear_root(const BigRational& root, Var var = Var::x12);

  Var var() const { return var_; }
  void set_var(Var v) { var_ = v; }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<BigRational>& coeffs() const { return coeffs_; }
  // Zero for indices beyond the degree.
  BigRational coeff(int i) const;
  const BigRational& leading() const;

  BigRational eval(const BigRational& x) const;
  double eval(double x) const;
  int sign_at(const BigRational& x) const { return eval(x).sign(); }

  UniPoly derivative() const;
  // Positive rational c with p = c * primitive_part(p) and the primitive part
  // having coprime integer coefficients. Zero for the zero polynomial.
  BigRational content() const;
  UniPoly primitive_part() const;
  UniPoly monic() const;
  BigRational max_abs_coeff() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const BigRational& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const BigRational& c) { return a *= c; }
  friend UniPoly operator*(const BigRational& c, UniPoly a) { return a *= c; }
  friend UniPoly operator-(UniPoly a);

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  friend std::ostream& operator<<(std::ostream& os, const UniPoly& p);

 private:
  void trim();
  Var var_;
  std::vector<BigRational> coeffs_;
};

struct DivMod {
  UniPoly quotient;
  UniPoly remainder;
};

// a = q*b + r with deg r < deg b. Throws Error(zero_divisor) for b = 0.
DivMod divmod(const UniPoly& a, const UniPoly& b);
// Quotient of an exact division; throws Error(zero_divisor) or, when the
// remainder is nonzero, Error(invalid_argument).
UniPoly divide_exact(const UniPoly& a, const UniPoly& b);

// Monic gcd. Throws Error(invalid_argument) when both inputs are zero.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
UniPoly squarefree_part(const UniPoly& p);

struct SquarefreeFactor {
  UniPoly factor;
  int multiplicity;
};
// Yun's decomposition: p = c * prod factor_i^multiplicity_i with squarefree,
// pairwise coprime, nonconstant factors.
std::vector<SquarefreeFactor> squarefree_decomposition(const UniPoly& p);

}  // namespace soe::poly
