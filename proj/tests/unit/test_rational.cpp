#include "doctest.h"
#include "generators.hpp"
#include "soeinstein/error.hpp"
#include "soeinstein/poly/rational.hpp"

using soe::Error;
using soe::ErrorCode;
using soe::poly::BigRational;

TEST_CASE("rational is kept in lowest terms with positive denominator") {
  const BigRational r(6, -4);
  CHECK(r.str() == "-3/2");
  CHECK(r.denominator() == 2);
  CHECK(BigRational(0, 5).str() == "0");
  CHECK(BigRational(0, 5).fraction_str() == "0/1");
  CHECK(BigRational(10, 5).is_integer());
}

TEST_CASE("rational parse and print round trip") {
  for (const char* s : {"0", "7", "-7", "3/7", "-22/7", "123456789012345678901234567891/8"}) {
    CHECK(BigRational::parse(s).str() == s);
  }
  CHECK_THROWS_AS(BigRational::parse("1/0"), Error);
  CHECK_THROWS_AS(BigRational::parse("abc"), Error);
  CHECK_THROWS_AS(BigRational::parse(""), Error);
}

TEST_CASE("division by zero reports zero divisor") {
  try {
    (void)(BigRational(1) / BigRational(0));
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::zero_divisor);
  }
}

TEST_CASE("from_double is exact") {
  CHECK(BigRational::from_double(0.5) == BigRational(1, 2));
  CHECK(BigRational::from_double(-3.0) == BigRational(-3));
  const double x = 0.1;
  CHECK(BigRational::from_double(x).to_double() == x);
  CHECK(BigRational::from_double(x) != BigRational(1, 10));
}

TEST_CASE("simplest rational between bounds") {
  CHECK(soe::poly::simplest_between(BigRational(3, 10), BigRational(1, 2)) == BigRational(1, 2));
  CHECK(soe::poly::simplest_between(BigRational(1, 3), BigRational(1, 3)) == BigRational(1, 3));
  CHECK(soe::poly::simplest_between(BigRational(42857, 100000), BigRational(42858, 100000)) == BigRational(3, 7));
  CHECK(soe::poly::simplest_between(BigRational(-5, 2), BigRational(-2, 1)) == BigRational(-2));
}

TEST_CASE("field axioms on random rationals") {
  soe::test::Gen g(11);
  for (int i = 0; i < 200; ++i) {
    const BigRational a = g.rational(), b = g.rational(), c = g.nonzero_rational();
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a / c) * c == a);
    CHECK(a - a == BigRational(0));
    CHECK(((a < b) || (a == b) || (a > b)));
  }
}
