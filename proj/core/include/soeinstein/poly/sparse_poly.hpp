#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "soeinstein/error.hpp"
#include "soeinstein/poly/rational.hpp"
#include "soeinstein/poly/unipoly.hpp"
#include "soeinstein/poly/var.hpp"

namespace soe::poly {

// Sparse polynomial in N tagged variables over Q. Exponents are signed so the
// same type also carries Laurent polynomials (needed when Ricci components
// with monomial denominators are manipulated symbolically); is_polynomial()
// tells the two apart. No stored coefficient is ever zero.
template <std::size_t N>
class SparsePoly {
 public:
  using Exponents = std::array<int, N>;
  using Vars = std::array<Var, N>;
  using Terms = std::map<Exponents, BigRational>;

  SparsePoly() = default;
  explicit SparsePoly(const Vars& vars) : vars_(vars) {}
  SparsePoly(const Vars& vars, const BigRational& c) : vars_(vars) {
    if (!c.is_zero()) terms_[Exponents{}] = c;
  }

  static SparsePoly term(const Vars& vars, const Exponents& e, const BigRational& c) {
    SparsePoly p(vars);
    if (!c.is_zero()) p.terms_[e] = c;
    return p;
  }
  static SparsePoly variable(const Vars& vars, std::size_t index) {
    Exponents e{};
    e[index] = 1;
    return term(vars, e, BigRational(1));
  }

  const Vars& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  std::size_t index_of(Var v) const {
    for (std::size_t i = 0; i < N; ++i) {
      if (vars_[i] == v) return i;
    }
    throw Error(ErrorCode::invalid_argument, "variable " + std::string(name(v)) + " not present");
  }

  BigRational coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigRational() : it->second;
  }

  void add_term(const Exponents& e, const BigRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  bool is_polynomial() const {
    for (const auto& [e, c] : terms_) {
      for (int x : e) {
        if (x < 0) return false;
      }
    }
    return true;
  }

  // Highest exponent of variable `index`; -1 for the zero polynomial.
  int degree_in(std::size_t index) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[index]);
    return d;
  }
  int degree_in(Var v) const { return degree_in(index_of(v)); }

  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }

  // Componentwise minimum exponent over all terms (zeros for the zero poly).
  Exponents min_exponents() const {
    if (terms_.empty()) return Exponents{};
    Exponents m;
    m.fill(std::numeric_limits<int>::max());
    for (const auto& [e, c] : terms_) {
      for (std::size_t i = 0; i < N; ++i) m[i] = std::min(m[i], e[i]);
    }
    return m;
  }

  SparsePoly shifted(const Exponents& by) const {
    SparsePoly out(vars_);
    for (const auto& [e, c] : terms_) {
      Exponents f = e;
      for (std::size_t i = 0; i < N; ++i) f[i] += by[i];
      out.terms_.emplace(f, c);
    }
    return out;
  }

  // Divides out the largest monomial dividing every term (for a Laurent
  // polynomial this multiplies by the smallest monomial that clears all
  // denominators). The result has a zero min exponent in every variable.
  SparsePoly without_monomial_content() const {
    Exponents m = min_exponents();
    for (auto& x : m) x = -x;
    return shifted(m);
  }

  BigRational max_abs_coeff() const {
    BigRational m;
    for (const auto& [e, c] : terms_) m = max(m, abs(c));
    return m;
  }

  BigRational eval(const std::array<BigRational, N>& at) const {
    BigRational acc;
    for (const auto& [e, c] : terms_) {
      BigRational t = c;
      for (std::size_t i = 0; i < N; ++i) {
        if (e[i] >= 0) {
          t *= pow(at[i], static_cast<unsigned>(e[i]));
        } else {
          t /= pow(at[i], static_cast<unsigned>(-e[i]));
        }
      }
      acc += t;
    }
    return acc;
  }

  double eval(const std::array<double, N>& at) const {
    double acc = 0.0;
    for (const auto& [e, c] : terms_) {
      double t = c.to_double();
      for (std::size_t i = 0; i < N; ++i) {
        for (int j = 0; j < std::abs(e[i]); ++j) t = e[i] > 0 ? t * at[i] : t / at[i];
      }
      acc += t;
    }
    return acc;
  }

  // Sum of |c| * |monomial| at the point; a natural magnitude scale for
  // judging whether eval() is small relative to cancellation.
  double abs_scale(const std::array<double, N>& at) const {
    double acc = 0.0;
    for (const auto& [e, c] : terms_) {
      double t = std::abs(c.to_double());
      for (std::size_t i = 0; i < N; ++i) {
        for (int j = 0; j < std::abs(e[i]); ++j) t = e[i] > 0 ? t * std::abs(at[i]) : t / std::abs(at[i]);
      }
      acc += t;
    }
    return acc;
  }

  // Coefficients of powers of variable `index` as univariate polynomials in
  // variable `other` (N == 2 only). Requires nonnegative exponents.
  std::vector<UniPoly> coefficients_in(std::size_t index) const {
    static_assert(N == 2, "coefficients_in is defined for bivariate polynomials");
    if (!is_polynomial()) throw Error(ErrorCode::invalid_argument, "Laurent polynomial has no coefficient list");
    const std::size_t other = 1 - index;
    std::vector<UniPoly> out(static_cast<std::size_t>(std::max(degree_in(index) + 1, 0)), UniPoly(vars_[other]));
    for (const auto& [e, c] : terms_) {
      out[static_cast<std::size_t>(e[index])] += UniPoly::monomial(c, e[other], vars_[other]);
    }
    return out;
  }

  // Restriction of the polynomial at variable `index` = value, dropping no
  // variables (the substituted exponent becomes 0).
  SparsePoly substitute(std::size_t index, const BigRational& value) const {
    SparsePoly out(vars_);
    for (const auto& [e, c] : terms_) {
      Exponents f = e;
      f[index] = 0;
      BigRational t = c;
      if (e[index] >= 0) {
        t *= pow(value, static_cast<unsigned>(e[index]));
      } else {
        t /= pow(value, static_cast<unsigned>(-e[index]));
      }
      out.add_term(f, t);
    }
    return out;
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    adopt_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    adopt_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  SparsePoly& operator*=(const BigRational& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly out(a.vars_);
    out.adopt_vars(b);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e;
        for (std::size_t i = 0; i < N; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

  // Division is supported only by a single nonzero term (Laurent inverse).
  friend SparsePoly operator/(const SparsePoly& a, const SparsePoly& b) {
    if (b.terms_.size() != 1) {
      throw Error(b.is_zero() ? ErrorCode::zero_divisor : ErrorCode::invalid_argument,
                  b.is_zero() ? "zero divisor" : "division by a non-monomial polynomial");
    }
    const auto& [eb, cb] = *b.terms_.begin();
    Exponents neg;
    for (std::size_t i = 0; i < N; ++i) neg[i] = -eb[i];
    SparsePoly out = a.shifted(neg);
    out.adopt_vars(b);
    out *= BigRational(1) / cb;
    return out;
  }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator-(SparsePoly a) { return a *= BigRational(-1); }
  friend SparsePoly operator*(SparsePoly a, const BigRational& s) { return a *= s; }
  friend SparsePoly operator*(const BigRational& s, SparsePoly a) { return a *= s; }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.terms_ == b.terms_ && (a.is_zero() || a.vars_ == b.vars_);
  }

  friend std::ostream& operator<<(std::ostream& os, const SparsePoly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (auto it = p.terms_.rbegin(); it != p.terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      if (!first) os << (c.sign() < 0 ? " - " : " + ");
      else if (c.sign() < 0) os << "-";
      os << abs(c).str();
      for (std::size_t i = 0; i < N; ++i) {
        if (e[i] == 0) continue;
        os << "*" << name(p.vars_[i]);
        if (e[i] != 1) os << "^" << e[i];
      }
      first = false;
    }
    return os;
  }

 private:
  void adopt_vars(const SparsePoly& o) {
    if (o.is_zero() || vars_ == o.vars_) return;
    if (is_zero()) {
      vars_ = o.vars_;
      return;
    }
    throw Error(ErrorCode::invalid_argument, "variable mismatch between sparse polynomials");
  }

  Vars vars_{};
  Terms terms_;
};

using BiPoly = SparsePoly<2>;
using TriPoly = SparsePoly<3>;

// Rational c with a == c * b when such c exists (b != 0). Decided by exact
// cross-multiplication against one pair of corresponding coefficients, then
// verified on every term.
template <std::size_t N>
std::optional<BigRational> proportionality_constant(const SparsePoly<N>& a, const SparsePoly<N>& b) {
  if (b.is_zero()) return a.is_zero() ? std::optional<BigRational>(BigRational(1)) : std::nullopt;
  if (a.size() != b.size()) return std::nullopt;
  const auto& [e0, c0] = *b.terms().begin();
  const BigRational ratio = a.coeff(e0) / c0;
  if (ratio.is_zero()) return std::nullopt;
  for (const auto& [e, c] : b.terms()) {
    if (a.coeff(e) != ratio * c) return std::nullopt;
  }
  return ratio;
}

// Evaluates the trailing M - N variables at the given values and drops
// them. The leading N variables are kept in order.
template <std::size_t N, std::size_t M>
SparsePoly<N> specialize_trailing(const SparsePoly<M>& p, const std::array<BigRational, M - N>& values) {
  static_assert(N < M);
  typename SparsePoly<N>::Vars vars;
  std::copy_n(p.vars().begin(), N, vars.begin());
  SparsePoly<N> out(vars);
  for (const auto& [e, c] : p.terms()) {
    typename SparsePoly<N>::Exponents f;
    std::copy_n(e.begin(), N, f.begin());
    BigRational t = c;
    for (std::size_t i = N; i < M; ++i) {
      if (e[i] < 0) throw Error(ErrorCode::invalid_argument, "negative exponent in specialized variable");
      t *= pow(values[i - N], static_cast<unsigned>(e[i]));
    }
    out.add_term(f, t);
  }
  return out;
}

// Univariate view of a one-variable sparse polynomial.
inline UniPoly to_unipoly(const SparsePoly<1>& p) {
  UniPoly out(p.vars()[0]);
  for (const auto& [e, c] : p.terms()) {
    if (e[0] < 0) throw Error(ErrorCode::invalid_argument, "Laurent term in univariate conversion");
    out += UniPoly::monomial(c, e[0], p.vars()[0]);
  }
  return out;
}

}  // namespace soe::poly
