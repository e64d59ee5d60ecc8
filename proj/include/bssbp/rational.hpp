#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "bssbp/errors.hpp"

namespace bssbp {

// Arbitrary-precision rational number, always in canonical form: numerator and
// denominator coprime, denominator positive. Backed by GMP's mpq.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(n) {}
  Rational(long num, long den);
  explicit Rational(const mpz_class& n) : v_(n) {}
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class q);

  // Accepts "p", "p/q", optional leading sign. Throws ValidationError.
  static Rational parse(std::string_view text);

  // 2^k for any integer k.
  static Rational pow2(long k);

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  int sign() const { return mpq_sgn(v_.get_mpq_t()); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational abs() const;
  Rational reciprocal() const;

  // Canonical text form "p/q" (always includes the denominator).
  std::string to_string() const;

  // Decimal expansion with `digits` fractional digits, rounded half away
  // from zero. Used for approximate display only.
  std::string decimal(std::size_t digits) const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class v_;
};

// Three-way comparison, -1/0/+1.
int compare(const Rational& a, const Rational& b);

// Exact square root if `r` is a perfect square of a rational, otherwise unset.
bool exact_sqrt(const Rational& r, Rational& out);

// Rational bounds on sqrt(r) for r >= 0, with  lower <= sqrt(r) <= upper  and
// upper - lower == 1/(den(r) * 2^precision_bits). Used where a certified
// one-sided bound is needed.
void sqrt_bounds(const Rational& r, unsigned precision_bits, Rational& lower, Rational& upper);

using RatVec = std::vector<Rational>;

}  // namespace bssbp
