#include "bssbp/quadratic_number.hpp"

#include <ostream>

namespace bssbp {

namespace {

// Sign of a + b*sqrt(d), d >= 0; no canonical-form assumptions.
int sign_one_radical(const Rational& a, const Rational& b, const Rational& d) {
  if (b.is_zero() || d.is_zero()) return a.sign();
  if (b.sign() > 0) {
    if (a.sign() >= 0) return 1;
    return compare(b * b * d, a * a);  // a < 0: sign of b*sqrt(d) - |a|
  }
  if (a.sign() <= 0) return -1;
  return compare(a * a, b * b * d);  // b < 0 < a: sign of a - |b|*sqrt(d)
}

}  // namespace

int sign_with_two_radicals(const Rational& p, const Rational& q, const Rational& d1,
                           const Rational& r, const Rational& d2) {
  if (q.is_zero() || d1.is_zero()) return sign_one_radical(p, r, d2);
  if (r.is_zero() || d2.is_zero()) return sign_one_radical(p, q, d1);
  if (d1 == d2) return sign_one_radical(p, q + r, d1);
  // u := q*sqrt(d1) + r*sqrt(d2)
  int su = q.sign() == r.sign() ? q.sign() : q.sign() * compare(q * q * d1, r * r * d2);
  if (p.is_zero()) return su;
  if (su == 0) return p.sign();
  if (p.sign() == su) return p.sign();
  // Opposite signs: compare p^2 against u^2 = q^2 d1 + r^2 d2 + 2qr sqrt(d1 d2).
  int c = sign_one_radical(p * p - q * q * d1 - r * r * d2, Rational(-2) * q * r, d1 * d2);
  if (c == 0) return 0;
  return c > 0 ? p.sign() : su;
}

QuadraticNumber::QuadraticNumber(const Rational& a, const Rational& b, const Rational& d)
    : a_(a), b_(b), d_(d) {
  if (d_.sign() < 0) throw NegativeRadicandError("negative radicand: " + d_.to_string());
  if (b_.is_zero()) {
    d_ = Rational(0);
    return;
  }
  if (d_.is_zero()) {
    b_ = Rational(0);
    return;
  }
  Rational root;
  if (exact_sqrt(d_, root)) {
    a_ += b_ * root;
    b_ = Rational(0);
    d_ = Rational(0);
  }
}

QuadraticNumber QuadraticNumber::sqrt_of(const Rational& d) {
  return QuadraticNumber(Rational(0), Rational(1), d);
}

Rational QuadraticNumber::as_rational() const {
  if (!is_rational()) throw ValidationError("irrational value: " + to_string());
  return a_;
}

int QuadraticNumber::sign() const { return sign_one_radical(a_, b_, d_); }

Rational QuadraticNumber::merged_radicand(const QuadraticNumber& a, const QuadraticNumber& b) {
  if (a.b_.is_zero()) return b.d_;
  if (b.b_.is_zero()) return a.d_;
  if (a.d_ != b.d_)
    throw RadicandMismatchError("radicand mismatch: sqrt(" + a.d_.to_string() + ") vs sqrt(" +
                                b.d_.to_string() + ")");
  return a.d_;
}

QuadraticNumber& QuadraticNumber::operator+=(const QuadraticNumber& o) {
  d_ = merged_radicand(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  if (b_.is_zero()) d_ = Rational(0);
  return *this;
}

QuadraticNumber& QuadraticNumber::operator-=(const QuadraticNumber& o) {
  d_ = merged_radicand(*this, o);
  a_ -= o.a_;
  b_ -= o.b_;
  if (b_.is_zero()) d_ = Rational(0);
  return *this;
}

QuadraticNumber& QuadraticNumber::operator*=(const QuadraticNumber& o) {
  Rational d = merged_radicand(*this, o);
  Rational a = a_ * o.a_ + b_ * o.b_ * d;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  d_ = b_.is_zero() ? Rational(0) : d;
  return *this;
}

QuadraticNumber QuadraticNumber::reciprocal() const {
  if (is_zero()) throw DivisionByZeroError("reciprocal of zero");
  if (is_rational()) return QuadraticNumber(a_.reciprocal());
  // (a + b sqrt(d))^-1 = (a - b sqrt(d)) / (a^2 - b^2 d). The conjugate norm
  // cannot vanish here: a^2 == b^2 d would make d a perfect square, which the
  // constructor collapses to rational form.
  Rational norm = a_ * a_ - b_ * b_ * d_;
  return QuadraticNumber(a_ / norm, -b_ / norm, d_);
}

QuadraticNumber& QuadraticNumber::operator/=(const QuadraticNumber& o) {
  if (o.is_zero()) throw DivisionByZeroError("division by zero");
  merged_radicand(*this, o);
  *this *= o.reciprocal();
  return *this;
}

int compare(const QuadraticNumber& x, const QuadraticNumber& y) {
  return sign_with_two_radicals(x.a_ - y.a_, x.b_, x.d_, -y.b_, y.d_);
}

std::string QuadraticNumber::to_string() const {
  if (is_rational()) return a_.to_string();
  return a_.to_string() + " + " + b_.to_string() + "*sqrt(" + d_.to_string() + ")";
}

std::string QuadraticNumber::decimal(std::size_t digits) const {
  if (is_rational()) return a_.decimal(digits);
  // Bound sqrt(d) tightly enough that the printed digits are stable.
  unsigned bits = static_cast<unsigned>(4 * (digits + 4));
  Rational lo, hi;
  sqrt_bounds(d_, bits, lo, hi);
  Rational approx = a_ + b_ * (b_.sign() >= 0 ? lo : hi);
  return approx.decimal(digits);
}

std::ostream& operator<<(std::ostream& os, const QuadraticNumber& x) {
  return os << x.to_string();
}

}  // namespace bssbp
