#pragma once

#include <vector>

#include "bssbp/quadratic_number.hpp"
#include "bssbp/rational.hpp"

namespace bssbp {

// Dense univariate polynomial over the rationals, coefficients ascending by
// degree with no trailing zeros.
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(RatVec coeffs);

  static UnivariatePolynomial zero() { return UnivariatePolynomial(); }
  static UnivariatePolynomial constant(const Rational& c);
  // c0 + c1 x + ... given as an initializer-friendly vector.
  static UnivariatePolynomial from_coeffs(RatVec coeffs) { return UnivariatePolynomial(std::move(coeffs)); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const RatVec& coefficients() const { return c_; }
  const Rational& leading() const;
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

  Rational evaluate(const Rational& x) const;
  QuadraticNumber evaluate(const QuadraticNumber& x) const;

  UnivariatePolynomial derivative() const;

  UnivariatePolynomial& operator+=(const UnivariatePolynomial& o);
  UnivariatePolynomial& operator-=(const UnivariatePolynomial& o);
  friend UnivariatePolynomial operator+(UnivariatePolynomial a, const UnivariatePolynomial& b) { a += b; return a; }
  friend UnivariatePolynomial operator-(UnivariatePolynomial a, const UnivariatePolynomial& b) { a -= b; return a; }
  friend UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
  UnivariatePolynomial scaled(const Rational& c) const;

  friend bool operator==(const UnivariatePolynomial& a, const UnivariatePolynomial& b) { return a.c_ == b.c_; }

  // Euclidean division: a = q*b + r with deg r < deg b. b must be nonzero.
  static void divmod(const UnivariatePolynomial& a, const UnivariatePolynomial& b,
                     UnivariatePolynomial& quotient, UnivariatePolynomial& remainder);
  // Monic gcd.
  static UnivariatePolynomial gcd(UnivariatePolynomial a, UnivariatePolynomial b);
  // p with repeated roots stripped: p / gcd(p, p').
  UnivariatePolynomial square_free_part() const;

 private:
  void trim();
  RatVec c_;
};

// Open interval (lo, hi) containing exactly one distinct real root.
struct RootInterval {
  Rational lo, hi;
  Rational width() const { return hi - lo; }
};

// Sturm chain of p: plain polynomial remainders with exact rational
// coefficients, no pseudo-remainder scaling.
std::vector<UnivariatePolynomial> sturm_sequence(const UnivariatePolynomial& p);

// Number of distinct real roots in (lo, hi). Endpoints must not be roots.
int count_distinct_roots(const UnivariatePolynomial& p, const Rational& lo, const Rational& hi);

// Pairwise-disjoint isolating intervals, in increasing order, for all distinct
// roots of p in (lo, hi). Throws EndpointIsRootError if p vanishes at lo or hi.
std::vector<RootInterval> isolate_roots(const UnivariatePolynomial& p, const Rational& lo,
                                        const Rational& hi);

// Shrinks an isolating interval until its width is at most max_width.
RootInterval refine_root(const UnivariatePolynomial& p, RootInterval interval,
                         const Rational& max_width);

}  // namespace bssbp
