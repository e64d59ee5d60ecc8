#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "bssbp/rational.hpp"
#include "test_util.hpp"

using namespace bssbp;

TEST_CASE("parsing and canonical form") {
  CHECK(Rational::parse("3/4").to_string() == "3/4");
  CHECK(Rational::parse("6/8").to_string() == "3/4");
  CHECK(Rational::parse("-6/8").to_string() == "-3/4");
  CHECK(Rational::parse("3/-4").to_string() == "-3/4");  // sign moves to the numerator
  CHECK(Rational::parse("5").to_string() == "5/1");
  CHECK(Rational::parse("0/7") == Rational(0));
  CHECK(Rational::parse("  12/3 ") == Rational(4));
  CHECK_THROWS_AS(Rational::parse("1/0"), ValidationError);
  CHECK_THROWS_AS(Rational::parse(""), ValidationError);
  CHECK_THROWS_AS(Rational::parse("a/b"), ValidationError);
  CHECK_THROWS_AS(Rational::parse("1.5"), ValidationError);
}

TEST_CASE("arithmetic and comparisons") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == b);
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(-a == Rational(-1, 3));
  CHECK(a.abs() == a);
  CHECK((-a).abs() == a);
  CHECK(a.reciprocal() == Rational(3));
  CHECK_THROWS_AS(Rational(0).reciprocal(), DivisionByZeroError);
  CHECK_THROWS_AS(a / Rational(0), DivisionByZeroError);
  CHECK(compare(a, b) > 0);
  CHECK(compare(b, a) < 0);
  CHECK(compare(a, a) == 0);
  CHECK(a > b);
  CHECK(b < a);
  CHECK(a != b);
  CHECK(Rational(2, 4) == Rational(1, 2));
}

TEST_CASE("sign and classification") {
  CHECK(Rational(-3, 7).sign() == -1);
  CHECK(Rational(0).sign() == 0);
  CHECK(Rational(5, 2).sign() == 1);
  CHECK(Rational(0).is_zero());
  CHECK(Rational(6, 3).is_integer());
  CHECK(!Rational(1, 2).is_integer());
}

TEST_CASE("powers of two") {
  CHECK(Rational::pow2(0) == Rational(1));
  CHECK(Rational::pow2(3) == Rational(8));
  CHECK(Rational::pow2(-3) == Rational(1, 8));
  CHECK(Rational::pow2(-20) == Rational(1, 1048576));
}

TEST_CASE("decimal rendering rounds half away from zero") {
  CHECK(Rational(1, 4).decimal(3) == "0.250");
  CHECK(Rational(1, 3).decimal(4) == "0.3333");
  CHECK(Rational(2, 3).decimal(4) == "0.6667");
  CHECK(Rational(-1, 8).decimal(2) == "-0.13");
  CHECK(Rational(1, 2).decimal(0) == "1");
  CHECK(Rational(-1, 2).decimal(0) == "-1");
  CHECK(Rational(0).decimal(3) == "0.000");
  CHECK(Rational(7).decimal(2) == "7.00");
}

TEST_CASE("exact square roots") {
  Rational root;
  CHECK(exact_sqrt(Rational(4, 9), root));
  CHECK(root == Rational(2, 3));
  CHECK(exact_sqrt(Rational(0), root));
  CHECK(root == Rational(0));
  CHECK(exact_sqrt(Rational(1, 1048576), root));
  CHECK(root == Rational(1, 1024));
  CHECK(!exact_sqrt(Rational(2), root));
  CHECK(!exact_sqrt(Rational(4, 7), root));
  CHECK(!exact_sqrt(Rational(-1), root));
  CHECK_THROWS_AS(sqrt_bounds(Rational(-1), 8, root, root), NegativeRadicandError);
}

TEST_CASE("square root bounds sandwich the value") {
  std::mt19937 gen(7);
  for (int i = 0; i < 200; ++i) {
    Rational v = testutil::rand_rational(gen, 0, 50, 40);
    Rational lo, hi;
    sqrt_bounds(v, 32, lo, hi);
    CHECK(lo.sign() >= 0);
    CHECK(lo * lo <= v);
    CHECK(hi * hi >= v);
    CHECK(hi - lo <= Rational::pow2(-32));
  }
}

TEST_CASE("field axioms on random samples") {
  std::mt19937 gen(11);
  for (int i = 0; i < 500; ++i) {
    Rational a = testutil::rand_rational(gen, -30, 30, 25);
    Rational b = testutil::rand_rational(gen, -30, 30, 25);
    Rational c = testutil::rand_rational(gen, -30, 30, 25);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + Rational(0) == a);
    CHECK(a * Rational(1) == a);
    CHECK(a - a == Rational(0));
    if (!a.is_zero()) CHECK(a * a.reciprocal() == Rational(1));
  }
}
