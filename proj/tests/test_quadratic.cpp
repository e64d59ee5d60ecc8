#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "bssbp/quadratic_number.hpp"
#include "test_util.hpp"

using namespace bssbp;

namespace {

QuadraticNumber make(long a_n, long a_d, long b_n, long b_d, long d) {
  return QuadraticNumber(Rational(a_n, a_d)) +
         QuadraticNumber(Rational(b_n, b_d)) * QuadraticNumber::sqrt_of(Rational(d));
}

}  // namespace

TEST_CASE("perfect squares collapse to rationals") {
  QuadraticNumber q = QuadraticNumber::sqrt_of(Rational(4));
  CHECK(q.is_rational());
  CHECK(q.as_rational() == Rational(2));
  CHECK(QuadraticNumber::sqrt_of(Rational(9, 16)).as_rational() == Rational(3, 4));
  CHECK(QuadraticNumber::sqrt_of(Rational(0)).is_zero());
  QuadraticNumber r = QuadraticNumber::sqrt_of(Rational(2));
  CHECK(!r.is_rational());
  CHECK_THROWS_AS(r.as_rational(), ValidationError);
  CHECK_THROWS_AS(QuadraticNumber::sqrt_of(Rational(-2)), NegativeRadicandError);
}

TEST_CASE("sign determination without rounding") {
  // 1 - (3/4) sqrt(2) < 0 because (3/4)^2 * 2 = 9/8 > 1
  CHECK(make(1, 1, -3, 4, 2).sign() == -1);
  // 3/2 - (1/2) sqrt(2) > 0 because 9/4 > 1/2
  CHECK(make(3, 2, -1, 2, 2).sign() == 1);
  // sqrt(2) - 1 > 0, 1 - sqrt(2) < 0
  CHECK(make(-1, 1, 1, 1, 2).sign() == 1);
  CHECK(make(1, 1, -1, 1, 2).sign() == -1);
  CHECK(QuadraticNumber(0).sign() == 0);
  // (a + b sqrt d)(a - b sqrt d) = 0 is impossible for irrational values
  QuadraticNumber x = make(3, 1, -2, 1, 2);  // 3 - 2 sqrt 2 > 0 (9 > 8)
  CHECK(x.sign() == 1);
}

TEST_CASE("cross-radicand comparisons") {
  QuadraticNumber a = make(1, 1, 1, 1, 2);  // 1 + sqrt 2 = 2.414
  QuadraticNumber b = make(0, 1, 1, 1, 3);  // sqrt 3 = 1.732
  CHECK(compare(a, b) > 0);
  CHECK(compare(b, a) < 0);
  // 2 sqrt 2 equals sqrt 8 although the representations differ
  QuadraticNumber two_rt2 = make(0, 1, 2, 1, 2);
  QuadraticNumber rt8 = QuadraticNumber::sqrt_of(Rational(8));
  CHECK(compare(two_rt2, rt8) == 0);
  CHECK(!(two_rt2.radicand() == rt8.radicand()));
  // sqrt 2 + sqrt 3 vs sqrt 10: (sqrt2+sqrt3)^2 = 5 + 2 sqrt 6 < 10
  QuadraticNumber rt2 = QuadraticNumber::sqrt_of(Rational(2));
  QuadraticNumber rt10 = QuadraticNumber::sqrt_of(Rational(10));
  CHECK(compare(rt2 + QuadraticNumber(1), rt10) < 0);
}

TEST_CASE("arithmetic stays exact") {
  QuadraticNumber rt2 = QuadraticNumber::sqrt_of(Rational(2));
  CHECK((rt2 * rt2).as_rational() == Rational(2));
  QuadraticNumber x = QuadraticNumber(1) + rt2;
  // 1/(1 + sqrt 2) = sqrt 2 - 1 by conjugation
  CHECK(compare(x.reciprocal(), rt2 - QuadraticNumber(1)) == 0);
  CHECK((x * x.reciprocal() - QuadraticNumber(1)).is_zero());
  CHECK((x - x).is_zero());
  CHECK(compare(-x, QuadraticNumber(-1) - rt2) == 0);
  CHECK(compare(x.abs(), x) == 0);
  CHECK(compare((-x).abs(), x) == 0);
  // mixing incompatible radicands is refused
  QuadraticNumber rt3 = QuadraticNumber::sqrt_of(Rational(3));
  CHECK_THROWS_AS((void)(rt2 + rt3), RadicandMismatchError);
  CHECK_THROWS_AS((void)(rt2 * rt3), RadicandMismatchError);
  // rational operands merge into any radicand
  CHECK(compare(rt2 + QuadraticNumber(0), rt2) == 0);
  CHECK((rt3 * QuadraticNumber(0)).is_zero());
}

TEST_CASE("division by zero is refused") {
  QuadraticNumber rt2 = QuadraticNumber::sqrt_of(Rational(2));
  CHECK_THROWS_AS(QuadraticNumber(0).reciprocal(), DivisionByZeroError);
  CHECK_THROWS_AS((void)(rt2 / QuadraticNumber(0)), DivisionByZeroError);
}

TEST_CASE("decimal rendering") {
  QuadraticNumber rt2 = QuadraticNumber::sqrt_of(Rational(2));
  CHECK(rt2.decimal(10) == "1.4142135624");
  CHECK((-rt2).decimal(4) == "-1.4142");
  CHECK(QuadraticNumber(Rational(1, 4)).decimal(3) == "0.250");
  QuadraticNumber golden = (QuadraticNumber(1) + QuadraticNumber::sqrt_of(Rational(5))) /
                           QuadraticNumber(2);
  CHECK(golden.decimal(10) == "1.6180339887");
}

TEST_CASE("random consistency against rational arithmetic") {
  std::mt19937 gen(23);
  for (int i = 0; i < 300; ++i) {
    Rational a = testutil::rand_rational(gen, -10, 10, 8);
    Rational b = testutil::rand_rational(gen, -10, 10, 8);
    Rational d = testutil::rand_rational(gen, 0, 15, 4);
    QuadraticNumber x = QuadraticNumber(a) + QuadraticNumber(b) * QuadraticNumber::sqrt_of(d);
    QuadraticNumber y = QuadraticNumber(b) - QuadraticNumber(a) * QuadraticNumber::sqrt_of(d);
    // (x + y) - y == x and associated ring identities
    CHECK(((x + y) - y - x).is_zero());
    CHECK(compare(x * y, y * x) == 0);
    CHECK(((x + y) * (x - y) - (x * x - y * y)).is_zero());
    if (!y.is_zero()) CHECK((x / y * y - x).is_zero());
  }
}
