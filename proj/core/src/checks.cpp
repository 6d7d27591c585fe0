#include "soeinstein/solver/checks.hpp"

#include <sstream>

#include "soeinstein/error.hpp"
#include "soeinstein/poly/roots.hpp"

namespace soe::solver {

namespace {

std::array<BigRational, 2> kl(int k, int l) { return {BigRational(k), BigRational(l)}; }

void require_kl(int k, int l) {
  if (k < 3 || l < 2) {
    throw Error(ErrorCode::out_of_range,
                "need k >= 3 and l >= 2, got k = " + std::to_string(k) + ", l = " + std::to_string(l));
  }
}

[[noreturn]] void mismatch(int k, int l, const std::string& what) {
  std::ostringstream os;
  os << what << " at (k, l) = (" << k << ", " << l << ")";
  throw Error(ErrorCode::transcription_mismatch, os.str());
}

}  // namespace

BigRational h_at_zero_closed_form(int k, int l) {
  const BigRational K(k);
  const BigRational L(l);
  return BigRational(4) * pow(BigRational(5) * K - BigRational(2), 2) * pow(K - BigRational(1), 2) *
         (BigRational(2) * K + L - BigRational(1));
}

BigRational h_at_one_closed_form(int k, int l) {
  const BigRational K(k);
  const BigRational L(l);
  return (K - BigRational(1)) * (BigRational(2) * K + L - BigRational(1)) * (K - L) * pow(BigRational(2) * K + L, 2);
}

BigRational h_leading_closed_form(int k, int l) {
  const BigRational K(k);
  const BigRational L(l);
  return L * L * (K + L) * (BigRational(2) * K * K + BigRational(2) * K * L + L * L - L);
}

BigRational hlin_x3_coefficient_closed_form(int k, int l) {
  const BigRational K(k);
  const BigRational L(l);
  const BigRational one(1);
  const BigRational two(2);
  return two * (L - one) * (K - one) * (K - two) * (BigRational(5) * K - two) * (two * K + L - one) *
         (BigRational(3) * K * K + (two * K + L) * (L - one));
}

SignFacts sign_facts(int k, int l, const CoefficientData& data) {
  require_kl(k, l);
  const poly::UniPoly h = poly::to_unipoly(poly::specialize_trailing<1>(data.h, kl(k, l)));
  SignFacts f;
  f.k = k;
  f.l = l;
  f.h0 = h.eval(BigRational(0));
  f.h1 = h.eval(BigRational(1));
  f.leading = h.is_zero() ? BigRational(0) : h.leading();
  f.h0_expected = h_at_zero_closed_form(k, l);
  f.h1_expected = h_at_one_closed_form(k, l);
  f.leading_expected = h_leading_closed_form(k, l);
  f.boundary = k == l;
  f.hypothesis = l > k && k >= 3;

  if (f.h0 != f.h0_expected) mismatch(k, l, "h(0) = " + f.h0.str() + " differs from " + f.h0_expected.str());
  if (f.h1 != f.h1_expected) mismatch(k, l, "h(1) = " + f.h1.str() + " differs from " + f.h1_expected.str());
  if (h.degree() != 8 || f.leading != f.leading_expected) {
    mismatch(k, l, "leading coefficient " + f.leading.str() + " differs from " + f.leading_expected.str());
  }
  if (f.leading.sign() <= 0) mismatch(k, l, "leading coefficient is not positive");
  if (f.hypothesis) {
    if (f.h0.sign() <= 0) mismatch(k, l, "h(0) is not positive");
    if (f.h1.sign() >= 0) mismatch(k, l, "h(1) is not negative");
  }
  return f;
}

DescartesReport descartes_check_p(int k, int l, const CoefficientData& data) {
  require_kl(k, l);
  const poly::UniPoly p = poly::to_unipoly(poly::specialize_trailing<1>(data.p, kl(k, l)));
  DescartesReport r;
  r.k = k;
  r.l = l;
  r.hypothesis = l > k && k >= 3;
  r.signs = poly::descartes_signs(p);
  r.alternating = !r.signs.empty();
  for (std::size_t i = 0; i < r.signs.size(); ++i) {
    if (r.signs[i] != (i % 2 == 0 ? 1 : -1)) r.alternating = false;
  }
  const poly::UniPoly sf = poly::squarefree_part(p);
  if (sf.degree() >= 1) {
    const BigRational bound = poly::root_search_bound(sf);
    r.negative_roots = static_cast<int>(poly::isolate_roots(sf, -bound, BigRational(0)).size());
  }
  return r;
}

}  // namespace soe::solver
