#include "bssbp/rational.hpp"

#include <cctype>
#include <ostream>

namespace bssbp {

namespace {

void require_nonzero_den(const mpz_class& den) {
  if (den == 0) throw ValidationError("rational with zero denominator");
}

}  // namespace

Rational::Rational(long num, long den) {
  require_nonzero_den(mpz_class(den));
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  require_nonzero_den(den);
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ValidationError("empty rational literal");
  std::size_t i = 0;
  auto digits_from = [&](std::size_t start) {
    std::size_t j = start;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    return j;
  };
  if (text[i] == '+' || text[i] == '-') ++i;
  std::size_t num_end = digits_from(i);
  if (num_end == i) throw ValidationError("bad rational literal: " + std::string(text));
  mpz_class num(std::string(text.substr(0, num_end)), 10);
  mpz_class den(1);
  if (num_end != text.size()) {
    if (text[num_end] != '/') throw ValidationError("bad rational literal: " + std::string(text));
    std::size_t den_start = num_end + 1;
    std::size_t k = den_start;
    if (k < text.size() && (text[k] == '+' || text[k] == '-')) ++k;
    std::size_t den_end = digits_from(k);
    if (den_end == k || den_end != text.size())
      throw ValidationError("bad rational literal: " + std::string(text));
    den = mpz_class(std::string(text.substr(den_start)), 10);
  }
  return Rational(num, den);
}

Rational Rational::pow2(long k) {
  mpz_class p(1);
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(k >= 0 ? k : -k));
  return k >= 0 ? Rational(p) : Rational(mpz_class(1), p);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

Rational Rational::reciprocal() const {
  if (is_zero()) throw DivisionByZeroError("reciprocal of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
  return Rational(r);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZeroError("rational division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::to_string() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::decimal(std::size_t digits) const {
  mpz_class n = ::abs(v_.get_num());
  const mpz_class& d = v_.get_den();
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  // round(n * scale / d), half away from zero
  mpz_class scaled = n * scale * 2 + d;
  scaled /= d * 2;
  mpz_class ip = scaled / scale;
  mpz_class fp = scaled % scale;
  std::string out = sign() < 0 && scaled != 0 ? "-" : "";
  out += ip.get_str();
  if (digits > 0) {
    std::string frac = fp.get_str();
    out += "." + std::string(digits - frac.size(), '0') + frac;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

int compare(const Rational& a, const Rational& b) {
  return mpq_cmp(a.raw().get_mpq_t(), b.raw().get_mpq_t());
}

bool exact_sqrt(const Rational& r, Rational& out) {
  if (r.sign() < 0) return false;
  mpz_class num = r.numerator(), den = r.denominator();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  out = Rational(sn, sd);
  return true;
}

void sqrt_bounds(const Rational& r, unsigned precision_bits, Rational& lower, Rational& upper) {
  if (r.sign() < 0) throw NegativeRadicandError("sqrt of negative rational");
  // sqrt(p/q) = sqrt(p*q)/q; scale by 4^k so that floor/ceil of the integer
  // square root brackets the value to within 1/(q*2^k).
  mpz_class pq = r.numerator() * r.denominator();
  mpz_mul_2exp(pq.get_mpz_t(), pq.get_mpz_t(), 2 * precision_bits);
  mpz_class s;
  mpz_sqrt(s.get_mpz_t(), pq.get_mpz_t());  // floor
  mpz_class den = r.denominator();
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), precision_bits);
  lower = Rational(s, den);
  upper = Rational(s + 1, den);
}

}  // namespace bssbp
