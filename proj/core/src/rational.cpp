#include "soeinstein/poly/rational.hpp"

#include <cmath>

#include "soeinstein/error.hpp"

namespace soe::poly {

BigRational::BigRational(long num, long den) : q_(num, den) {
  if (den == 0) throw Error(ErrorCode::zero_divisor, "zero divisor");
  q_.canonicalize();
}

BigRational::BigRational(mpq_class value) : q_(std::move(value)) { q_.canonicalize(); }

BigRational BigRational::from_double(double value) {
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::invalid_argument, "cannot convert non-finite double to rational");
  }
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), value);
  return BigRational(std::move(q));
}

BigRational BigRational::parse(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw Error(ErrorCode::data_error, "empty rational literal");
  const auto slash = text.find('/');
  auto parse_int = [&](std::string_view s) {
    mpz_class z;
    std::string buf(s);
    if (buf.empty() || z.set_str(buf, 10) != 0) {
      throw Error(ErrorCode::data_error, "malformed rational literal '" + std::string(text) + "'");
    }
    return z;
  };
  if (slash == std::string_view::npos) return BigRational(parse_int(text));
  mpz_class num = parse_int(text.substr(0, slash));
  mpz_class den = parse_int(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::zero_divisor, "zero divisor");
  return BigRational(mpq_class(num, den));
}

double BigRational::to_double() const { return mpq_get_d(q_.get_mpq_t()); }

std::string BigRational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_str();
}

std::string BigRational::fraction_str() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw Error(ErrorCode::zero_divisor, "zero divisor");
  q_ /= o.q_;
  return *this;
}

BigRational abs(const BigRational& r) { return r.sign() < 0 ? -r : r; }

BigRational pow(const BigRational& base, unsigned exponent) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
  return BigRational(mpq_class(num, den));
}

BigRational min(const BigRational& a, const BigRational& b) { return b < a ? b : a; }
BigRational max(const BigRational& a, const BigRational& b) { return a < b ? b : a; }

BigRational pow2_inverse(unsigned e) {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, e);
  return BigRational(mpq_class(mpz_class(1), den));
}

namespace {

mpz_class floor_of(const BigRational& r) {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
  return out;
}

mpz_class ceil_of(const BigRational& r) {
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
  return out;
}

}  // namespace

BigRational simplest_between(const BigRational& lo, const BigRational& hi) {
  if (hi < lo) return simplest_between(hi, lo);
  if (lo.sign() <= 0 && hi.sign() >= 0) return BigRational(0);
  if (hi.sign() < 0) return -simplest_between(-hi, -lo);
  const BigRational c(ceil_of(lo));
  if (c <= hi) return c;
  // lo, hi share the integer part a and neither is an integer.
  const BigRational a(floor_of(lo));
  const BigRational inner = simplest_between(BigRational(1) / (hi - a), BigRational(1) / (lo - a));
  return a + BigRational(1) / inner;
}

}  // namespace soe::poly
