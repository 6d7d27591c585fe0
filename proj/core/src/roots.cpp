#include "soeinstein/poly/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "soeinstein/error.hpp"

namespace soe::poly {

namespace {

// Midpoint shift applied when a bisection point lands on a root.
constexpr unsigned kEndpointShiftBits = 40;
constexpr int kMaxBisections = 20000;

BigRational midpoint(const BigRational& a, const BigRational& b) { return (a + b) * BigRational(1, 2); }

BigRational split_point(const UniPoly& p, const BigRational& a, const BigRational& b) {
  BigRational m = midpoint(a, b);
  const BigRational step = (b - a) * pow2_inverse(kEndpointShiftBits);
  while (p.sign_at(m) == 0) m += step;
  return m;
}

bool inside(double x, const BigRational& lo, const BigRational& hi) {
  if (!std::isfinite(x)) return false;
  const BigRational bx = BigRational::from_double(x);
  return lo <= bx && bx <= hi;
}

RefinedRoot exact_root(const BigRational& r) {
  RefinedRoot out;
  out.value = r.to_double();
  out.certified_lo = r;
  out.certified_hi = r;
  out.relative_width = 0.0;
  return out;
}

}  // namespace

double clamp_to_bracket(double x, const BigRational& lo, const BigRational& hi) {
  if (!std::isfinite(x)) x = midpoint(lo, hi).to_double();
  BigRational bx = BigRational::from_double(x);
  if (bx < lo) {
    x = lo.to_double();
    if (BigRational::from_double(x) < lo) x = std::nextafter(x, std::numeric_limits<double>::infinity());
  } else if (bx > hi) {
    x = hi.to_double();
    if (BigRational::from_double(x) > hi) x = std::nextafter(x, -std::numeric_limits<double>::infinity());
  }
  return x;
}

SturmSequence::SturmSequence(const UniPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::invalid_argument, "Sturm sequence of the zero polynomial");
  chain_.push_back(p.primitive_part());
  if (p.is_constant()) return;
  chain_.push_back(p.derivative().primitive_part());
  while (true) {
    UniPoly r = divmod(chain_[chain_.size() - 2], chain_.back()).remainder;
    if (r.is_zero()) break;
    chain_.push_back((-r).primitive_part());
  }
  if (chain_.back().degree() > 0) throw Error(ErrorCode::not_squarefree, "not squarefree");
}

int SturmSequence::variations(const BigRational& x, Side side) const {
  int changes = 0;
  int prev = 0;
  for (std::size_t i = 0; i < chain_.size(); ++i) {
    int s = chain_[i].sign_at(x);
    if (i == 0 && s == 0 && chain_.size() > 1) {
      // Just right of a simple root p has the sign of p'; just left the opposite.
      s = chain_[1].sign_at(x);
      if (side == Side::left) s = -s;
    }
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

int SturmSequence::count(const BigRational& lo, const BigRational& hi) const {
  if (!(lo < hi)) throw Error(ErrorCode::invalid_argument, "Sturm count needs lo < hi");
  return variations(lo, Side::right) - variations(hi, Side::left);
}

int sturm_count(const UniPoly& p, const BigRational& lo, const BigRational& hi) {
  return SturmSequence(p).count(lo, hi);
}

std::vector<RootInterval> isolate_roots(const UniPoly& p, const BigRational& lo, const BigRational& hi) {
  const SturmSequence sturm(p);
  std::vector<RootInterval> out;
  struct Piece {
    BigRational a, b;
    int roots;
  };
  std::vector<Piece> work;
  if (const int c = sturm.count(lo, hi); c > 0) work.push_back({lo, hi, c});
  while (!work.empty()) {
    Piece piece = std::move(work.back());
    work.pop_back();
    const int sa = p.sign_at(piece.a);
    const int sb = p.sign_at(piece.b);
    if (piece.roots == 1 && sa != 0 && sb != 0) {
      out.push_back({piece.a, piece.b, sa});
      continue;
    }
    const BigRational m = split_point(p, piece.a, piece.b);
    const int left = sturm.count(piece.a, m);
    const int right = piece.roots - left;
    if (left > 0) work.push_back({piece.a, m, left});
    if (right > 0) work.push_back({m, piece.b, right});
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
  return out;
}

RefinedRoot refine_root_traced(const UniPoly& p, const RootInterval& iv, const RefineOptions& opts,
                               std::vector<BigRational>& trace) {
  BigRational lo = iv.lo;
  BigRational hi = iv.hi;
  if (!(lo < hi)) throw Error(ErrorCode::invalid_argument, "root interval needs lo < hi");
  const int s_hi = p.sign_at(hi);
  if (s_hi == 0) return exact_root(hi);
  const int s_lo = p.sign_at(lo);
  if (s_lo == 0 || s_lo == s_hi) {
    throw Error(ErrorCode::invalid_argument, "interval does not bracket a sign change");
  }
  if (p.degree() == 1) return exact_root(-p.coeff(0) / p.coeff(1));
  if (lo.sign() < 0 && hi.sign() > 0 && p.coeff(0).is_zero()) return exact_root(BigRational(0));

  for (int it = 0; relative_width(lo, hi) > opts.rel_tol; ++it) {
    if (it >= kMaxBisections) throw Error(ErrorCode::invalid_argument, "bisection failed to converge");
    const BigRational m = midpoint(lo, hi);
    const int s = p.sign_at(m);
    if (s == 0) return exact_root(m);
    (s == s_lo ? lo : hi) = m;
    trace.push_back(min(abs(p.eval(lo)), abs(p.eval(hi))));
  }

  // Roots with small denominators (e.g. 3/7) are never hit by dyadic
  // midpoints; the simplest rational in the bracket catches them.
  if (const BigRational q = simplest_between(lo, hi); p.sign_at(q) == 0) return exact_root(q);

  const UniPoly dp = p.derivative();
  double x = clamp_to_bracket(midpoint(lo, hi).to_double(), lo, hi);
  for (int step = 0; step < opts.newton_steps; ++step) {
    const double d = dp.eval(x);
    if (d == 0.0 || !std::isfinite(d)) break;
    const double next = x - p.eval(x) / d;
    if (!inside(next, lo, hi)) break;
    x = next;
  }

  RefinedRoot out;
  out.value = x;
  out.certified_lo = lo;
  out.certified_hi = hi;
  out.relative_width = relative_width(lo, hi);
  return out;
}

RefinedRoot refine_root(const UniPoly& p, const RootInterval& iv, const RefineOptions& opts) {
  std::vector<BigRational> trace;
  return refine_root_traced(p, iv, opts, trace);
}

BigRational cauchy_bound(const UniPoly& p) {
  if (p.degree() < 1) throw Error(ErrorCode::invalid_argument, "root bound of a constant polynomial");
  BigRational m;
  for (int i = 0; i < p.degree(); ++i) m = max(m, abs(p.coeff(i) / p.leading()));
  return BigRational(1) + m;
}

BigRational root_search_bound(const UniPoly& p) { return BigRational(1) + max(BigRational(1), cauchy_bound(p)); }

std::vector<int> descartes_signs(const UniPoly& p) {
  std::vector<int> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.sign());
  return out;
}

int sign_variations(const std::vector<int>& signs) {
  int changes = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

RationalInterval eval_enclosure(const UniPoly& p, const BigRational& lo, const BigRational& hi) {
  if (p.is_zero()) return {BigRational(0), BigRational(0)};
  RationalInterval acc{p.leading(), p.leading()};
  for (int i = p.degree() - 1; i >= 0; --i) {
    const BigRational c[4] = {acc.lo * lo, acc.lo * hi, acc.hi * lo, acc.hi * hi};
    acc.lo = min(min(c[0], c[1]), min(c[2], c[3])) + p.coeff(i);
    acc.hi = max(max(c[0], c[1]), max(c[2], c[3])) + p.coeff(i);
  }
  return acc;
}

double relative_width(const BigRational& lo, const BigRational& hi) {
  if (lo == hi) return 0.0;
  const BigRational scale = max(abs(lo), abs(hi));
  return (abs(hi - lo) / scale).to_double();
}

}  // namespace soe::poly
