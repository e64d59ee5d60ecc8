#pragma once

#include <string>

#include "bssbp/rational.hpp"

namespace bssbp {

// Exact scalar of the form  a + b*sqrt(d)  with rational a, b and rational
// radicand d >= 0.
//
// Representation invariants: b == 0 iff d == 0, and d is never a perfect
// square of a rational (such values collapse to their rational form on
// construction). The radicand is otherwise stored as given; no square-free
// normalization is performed, so equal values may carry different radicands
// (e.g. sqrt(8) and 2*sqrt(2)). All comparisons are exact value comparisons
// and work across different radicands; arithmetic requires both operands to
// live in one extension field QQ(sqrt(d)) and throws RadicandMismatchError
// otherwise.
class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  QuadraticNumber(const Rational& a) : a_(a) {}
  QuadraticNumber(int n) : a_(n) {}
  QuadraticNumber(const Rational& a, const Rational& b, const Rational& d);

  static QuadraticNumber sqrt_of(const Rational& d);

  const Rational& rational_part() const { return a_; }
  const Rational& radical_coefficient() const { return b_; }
  const Rational& radicand() const { return d_; }

  bool is_rational() const { return b_.is_zero(); }
  // Value as a Rational; throws ValidationError if the value is irrational.
  Rational as_rational() const;

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  QuadraticNumber abs() const { return sign() < 0 ? -*this : *this; }
  QuadraticNumber reciprocal() const;

  std::string to_string() const;
  std::string decimal(std::size_t digits) const;

  QuadraticNumber& operator+=(const QuadraticNumber& o);
  QuadraticNumber& operator-=(const QuadraticNumber& o);
  QuadraticNumber& operator*=(const QuadraticNumber& o);
  QuadraticNumber& operator/=(const QuadraticNumber& o);

  friend QuadraticNumber operator+(QuadraticNumber a, const QuadraticNumber& b) { a += b; return a; }
  friend QuadraticNumber operator-(QuadraticNumber a, const QuadraticNumber& b) { a -= b; return a; }
  friend QuadraticNumber operator*(QuadraticNumber a, const QuadraticNumber& b) { a *= b; return a; }
  friend QuadraticNumber operator/(QuadraticNumber a, const QuadraticNumber& b) { a /= b; return a; }
  friend QuadraticNumber operator-(const QuadraticNumber& a) {
    QuadraticNumber r;
    r.a_ = -a.a_;
    r.b_ = -a.b_;
    r.d_ = a.d_;
    return r;
  }

  friend bool operator==(const QuadraticNumber& a, const QuadraticNumber& b) { return compare(a, b) == 0; }
  friend bool operator!=(const QuadraticNumber& a, const QuadraticNumber& b) { return compare(a, b) != 0; }
  friend bool operator<(const QuadraticNumber& a, const QuadraticNumber& b) { return compare(a, b) < 0; }
  friend bool operator<=(const QuadraticNumber& a, const QuadraticNumber& b) { return compare(a, b) <= 0; }
  friend bool operator>(const QuadraticNumber& a, const QuadraticNumber& b) { return compare(a, b) > 0; }
  friend bool operator>=(const QuadraticNumber& a, const QuadraticNumber& b) { return compare(a, b) >= 0; }

  friend int compare(const QuadraticNumber& a, const QuadraticNumber& b);

 private:
  // Merges the radicands of two operands, throwing on a true mismatch.
  static Rational merged_radicand(const QuadraticNumber& a, const QuadraticNumber& b);

  Rational a_, b_, d_;
};

// Sign of  p + q*sqrt(d1) + r*sqrt(d2)  with d1, d2 >= 0, decided by rational
// comparisons alone (repeated squaring with case analysis on operand signs).
int sign_with_two_radicals(const Rational& p, const Rational& q, const Rational& d1,
                           const Rational& r, const Rational& d2);

std::ostream& operator<<(std::ostream& os, const QuadraticNumber& x);

}  // namespace bssbp
