#include "soeinstein/solver/system.hpp"

#include <sstream>

#include "soeinstein/error.hpp"
#include "soeinstein/lie/group_spec.hpp"
#include "soeinstein/ricci/ricci_closed.hpp"

namespace soe::solver {

using poly::BigRational;
using poly::Var;

namespace {

constexpr TriPoly::Vars kSystemVars = {Var::x2, Var::x3, Var::x12};
constexpr BiPoly::Vars kPairVars = {Var::x3, Var::x12};

void require_kl(int k, int l) {
  if (k < 3 || l < 2) {
    throw Error(ErrorCode::out_of_range,
                "need k >= 3 and l >= 2, got k = " + std::to_string(k) + ", l = " + std::to_string(l));
  }
}

std::array<BigRational, 2> kl(int k, int l) { return {BigRational(k), BigRational(l)}; }

TriPoly normalize(const TriPoly& diff, int n) { return (diff * BigRational(4 * (n - 2))).without_monomial_content(); }

// Embeds a univariate polynomial in x12 into (x3, x12).
BiPoly lift_x12(const UniPoly& u) {
  BiPoly out(kPairVars);
  for (int i = 0; i <= u.degree(); ++i) out.add_term({0, i}, u.coeff(i));
  return out;
}

BiPoly substitute_one(const TriPoly& f, const X2ClosedForm& x2) {
  const int d = f.degree_in(std::size_t{0});
  const BiPoly num = lift_x12(x2.numerator);
  const BiPoly den = lift_x12(x2.denominator);
  std::vector<BiPoly> num_pow{BiPoly(kPairVars, BigRational(1))};
  std::vector<BiPoly> den_pow{BiPoly(kPairVars, BigRational(1))};
  for (int i = 1; i <= d; ++i) {
    num_pow.push_back(num_pow.back() * num);
    den_pow.push_back(den_pow.back() * den);
  }
  BiPoly out(kPairVars);
  for (const auto& [e, c] : f.terms()) {
    out += BiPoly::term(kPairVars, {e[1], e[2]}, c) * num_pow[static_cast<std::size_t>(e[0])] *
           den_pow[static_cast<std::size_t>(d - e[0])];
  }
  return out.without_monomial_content();
}

BiPoly match_published(const BiPoly& derived, const BiPoly& published, const char* name) {
  auto c = poly::proportionality_constant(published.without_monomial_content(), derived);
  if (!c) {
    std::ostringstream os;
    os << name << " after substituting x2 is not proportional to the published polynomial";
    throw Error(ErrorCode::derivation_mismatch, os.str());
  }
  return derived * *c;
}

}  // namespace

SystemKL derive_system_from_ricci(int k, int l) {
  require_kl(k, l);
  const lie::GroupSpec spec(k, k, l);
  ricci::MetricParams<TriPoly> x;
  x.x1 = x.x2 = TriPoly::variable(kSystemVars, 0);
  x.x3 = TriPoly::variable(kSystemVars, 1);
  x.x12 = TriPoly::variable(kSystemVars, 2);
  x.x13 = x.x23 = TriPoly(kSystemVars, BigRational(1));
  const auto r = ricci::ricci_closed(spec, x);
  SystemKL s;
  s.k = k;
  s.l = l;
  s.f1 = normalize(r.r2 - r.r3, spec.n());
  s.f2 = normalize(r.r2 - r.r12, spec.n());
  s.f3 = normalize(r.r3 - r.r13, spec.n());
  return s;
}

SystemKL published_system(int k, int l, const CoefficientData& data) {
  SystemKL s;
  s.k = k;
  s.l = l;
  s.f1 = poly::specialize_trailing<3>(data.f1, kl(k, l));
  s.f2 = poly::specialize_trailing<3>(data.f2, kl(k, l));
  s.f3 = poly::specialize_trailing<3>(data.f3, kl(k, l));
  return s;
}

SystemKL build_system(int k, int l, const CoefficientData& data) {
  SystemKL derived = derive_system_from_ricci(k, l);
  const SystemKL published = published_system(k, l, data);
  const std::array<std::pair<const TriPoly*, const TriPoly*>, 3> pairs = {
      {{&derived.f1, &published.f1}, {&derived.f2, &published.f2}, {&derived.f3, &published.f3}}};
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    // A vanishing coefficient (l = 2) can leave a monomial factor in the
    // published polynomial.
    if (!(*pairs[i].first == pairs[i].second->without_monomial_content())) {
      std::ostringstream os;
      os << "f" << i + 1 << " derived from the Ricci components differs from the published polynomial at (k, l) = ("
         << k << ", " << l << ")";
      throw Error(ErrorCode::derivation_mismatch, os.str());
    }
  }
  return derived;
}

BiPoly project_to(const TriPoly& p, Var a, Var b) {
  const std::size_t ia = p.index_of(a);
  const std::size_t ib = p.index_of(b);
  BiPoly out(BiPoly::Vars{a, b});
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < 3; ++i) {
      if (i != ia && i != ib && e[i] != 0) {
        throw Error(ErrorCode::invalid_argument, "polynomial depends on a dropped variable");
      }
    }
    out.add_term({e[ia], e[ib]}, c);
  }
  return out;
}

F2Factors factor_f2(const SystemKL& sys, const CoefficientData& data) {
  const BiPoly f2 = project_to(sys.f2, Var::x2, Var::x12);
  // Synthetic division by (x2 - x12) over Q[x12].
  const std::vector<UniPoly> c = f2.coefficients_in(0);
  const int d = static_cast<int>(c.size()) - 1;
  if (d < 1) throw Error(ErrorCode::factorization_mismatch, "f2 does not depend on x2");
  const UniPoly x12 = UniPoly::monomial(BigRational(1), 1, Var::x12);
  std::vector<UniPoly> q(static_cast<std::size_t>(d), UniPoly(Var::x12));
  q[static_cast<std::size_t>(d - 1)] = c[static_cast<std::size_t>(d)];
  for (int i = d - 1; i >= 1; --i) {
    q[static_cast<std::size_t>(i - 1)] = c[static_cast<std::size_t>(i)] + x12 * q[static_cast<std::size_t>(i)];
  }
  const UniPoly remainder = c[0] + x12 * q[0];
  if (!remainder.is_zero()) throw Error(ErrorCode::factorization_mismatch, "x2 - x12 does not divide f2");

  F2Factors out{BiPoly(f2.vars()), BiPoly(f2.vars())};
  out.linear.add_term({1, 0}, BigRational(1));
  out.linear.add_term({0, 1}, BigRational(-1));
  for (int i = 0; i < d; ++i) {
    const UniPoly& qi = q[static_cast<std::size_t>(i)];
    for (int j = 0; j <= qi.degree(); ++j) out.quad.add_term({i, j}, qi.coeff(j));
  }
  if (!(out.linear * out.quad == f2)) throw Error(ErrorCode::factorization_mismatch, "factor product differs from f2");
  const BiPoly published = poly::specialize_trailing<2>(data.f2_cofactor, kl(sys.k, sys.l));
  if (!(published == out.quad)) {
    throw Error(ErrorCode::factorization_mismatch, "cofactor of x2 - x12 differs from the published one");
  }
  return out;
}

X2ClosedForm solve_quad_for_x2(const F2Factors& factors) {
  const std::vector<UniPoly> c = factors.quad.coefficients_in(0);
  if (c.size() != 2) throw Error(ErrorCode::factorization_mismatch, "cofactor is not linear in x2");
  X2ClosedForm form{-c[0], c[1]};
  form.numerator.set_var(Var::x12);
  form.denominator.set_var(Var::x12);
  return form;
}

SubstitutedPair substitute_x2(const SystemKL& sys, const X2ClosedForm& x2, const CoefficientData& data) {
  for (const auto& coef : x2.denominator.coeffs()) {
    if (coef.sign() < 0) throw Error(ErrorCode::derivation_mismatch, "x2 denominator is not positive");
  }
  const BiPoly g1 = substitute_one(sys.f1, x2);
  const BiPoly g2 = substitute_one(sys.f3, x2);
  SubstitutedPair out;
  out.g1 = match_published(g1, poly::specialize_trailing<2>(data.g1, kl(sys.k, sys.l)), "f1");
  out.g2 = match_published(g2, poly::specialize_trailing<2>(data.g2, kl(sys.k, sys.l)), "f3");
  return out;
}

}  // namespace soe::solver
