#include "soeinstein/poly/unipoly.hpp"

#include <algorithm>
#include <cmath>

#include "soeinstein/error.hpp"

namespace soe::poly {

namespace {

Var merged_var(const UniPoly& a, const UniPoly& b) {
  if (a.is_constant()) return b.var();
  if (b.is_constant() || a.var() == b.var()) return a.var();
  throw Error(ErrorCode::invalid_argument,
              "variable mismatch: " + std::string(name(a.var())) + " vs " + std::string(name(b.var())));
}

}  // namespace

UniPoly::UniPoly(std::vector<BigRational> coeffs, Var var) : var_(var), coeffs_(std::move(coeffs)) {
  trim();
}

UniPoly UniPoly::constant(const BigRational& c, Var var) { return UniPoly({c}, var); }

UniPoly UniPoly::monomial(const BigRational& c, int degree, Var var) {
  std::vector<BigRational> cs(static_cast<std::size_t>(degree) + 1);
  cs.back() = c;
  return UniPoly(std::move(cs), var);
}

UniPoly UniPoly::linear_root(const BigRational& root, Var var) { return UniPoly({-root, 1}, var); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BigRational UniPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return {};
  return coeffs_[static_cast<std::size_t>(i)];
}

const BigRational& UniPoly::leading() const {
  if (coeffs_.empty()) throw Error(ErrorCode::invalid_argument, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

BigRational UniPoly::eval(const BigRational& x) const {
  BigRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

double UniPoly::eval(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->to_double();
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return UniPoly(var_);
  std::vector<BigRational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * BigRational(static_cast<long>(i));
  return UniPoly(std::move(d), var_);
}

BigRational UniPoly::content() const {
  if (is_zero()) return {};
  mpz_class lcm_den = 1;
  for (const auto& c : coeffs_) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.raw().get_den_mpz_t());
  mpz_class g = 0;
  for (const auto& c : coeffs_) {
    mpz_class scaled = c.raw().get_num() * (lcm_den / c.raw().get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_mpz_t());
  }
  return BigRational(mpq_class(g, lcm_den));
}

UniPoly UniPoly::primitive_part() const {
  if (is_zero()) return *this;
  const BigRational inv = BigRational(1) / content();
  return *this * inv;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return *this * (BigRational(1) / leading());
}

BigRational UniPoly::max_abs_coeff() const {
  BigRational m;
  for (const auto& c : coeffs_) m = max(m, abs(c));
  return m;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  var_ = merged_var(*this, o);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  var_ = merged_var(*this, o);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  const Var v = merged_var(*this, o);
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    var_ = v;
    return *this;
  }
  std::vector<BigRational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  var_ = v;
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const BigRational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

UniPoly operator-(UniPoly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const BigRational& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    const BigRational a = abs(c);
    if (i == 0 || a != BigRational(1)) os << a.str();
    if (i > 0) {
      if (a != BigRational(1)) os << "*";
      os << name(p.var());
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os;
}

DivMod divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::zero_divisor, "zero divisor");
  const Var v = a.is_constant() ? b.var() : a.var();
  if (a.degree() < b.degree()) return {UniPoly(v), a};
  std::vector<BigRational> rem = a.coeffs();
  std::vector<BigRational> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const BigRational inv_lead = BigRational(1) / b.leading();
  const auto db = static_cast<std::size_t>(b.degree());
  for (std::size_t i = quo.size(); i-- > 0;) {
    const BigRational q = rem[i + db] * inv_lead;
    quo[i] = q;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[i + j] -= q * b.coeffs()[j];
  }
  rem.resize(db);
  return {UniPoly(std::move(quo), v), UniPoly(std::move(rem), v)};
}

UniPoly divide_exact(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(ErrorCode::invalid_argument, "inexact polynomial division");
  return q;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() && b.is_zero()) {
    throw Error(ErrorCode::invalid_argument, "gcd of two zero polynomials");
  }
  UniPoly x = a.primitive_part();
  UniPoly y = b.primitive_part();
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).remainder;
    x = std::move(y);
    y = r.primitive_part();
  }
  return x.monic();
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_constant()) return p;
  return divide_exact(p, gcd(p, p.derivative())).monic();
}

std::vector<SquarefreeFactor> squarefree_decomposition(const UniPoly& p) {
  std::vector<SquarefreeFactor> out;
  if (p.is_constant()) return out;
  const UniPoly dp = p.derivative();
  const UniPoly a0 = gcd(p, dp);
  UniPoly b = divide_exact(p, a0);
  UniPoly c = divide_exact(dp, a0);
  UniPoly d = c - b.derivative();
  for (int i = 1; !b.is_constant(); ++i) {
    UniPoly a = gcd(b, d);
    b = divide_exact(b, a);
    c = divide_exact(d, a);
    d = c - b.derivative();
    if (!a.is_constant()) out.push_back({a.monic(), i});
  }
  return out;
}

}  // namespace soe::poly
