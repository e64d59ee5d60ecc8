#include "bssbp/univariate.hpp"

#include <utility>

namespace bssbp {

UnivariatePolynomial::UnivariatePolynomial(RatVec coeffs) : c_(std::move(coeffs)) { trim(); }

UnivariatePolynomial UnivariatePolynomial::constant(const Rational& c) {
  return UnivariatePolynomial(RatVec{c});
}

void UnivariatePolynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& UnivariatePolynomial::leading() const {
  if (c_.empty()) throw ValidationError("leading coefficient of zero polynomial");
  return c_.back();
}

Rational UnivariatePolynomial::evaluate(const Rational& x) const {
  Rational acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

QuadraticNumber UnivariatePolynomial::evaluate(const QuadraticNumber& x) const {
  QuadraticNumber acc;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + QuadraticNumber(c_[i]);
  return acc;
}

UnivariatePolynomial UnivariatePolynomial::derivative() const {
  if (c_.size() <= 1) return UnivariatePolynomial();
  RatVec d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return UnivariatePolynomial(std::move(d));
}

UnivariatePolynomial& UnivariatePolynomial::operator+=(const UnivariatePolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UnivariatePolynomial& UnivariatePolynomial::operator-=(const UnivariatePolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  if (a.is_zero() || b.is_zero()) return UnivariatePolynomial();
  RatVec prod(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) prod[i + j] += a.c_[i] * b.c_[j];
  return UnivariatePolynomial(std::move(prod));
}

UnivariatePolynomial UnivariatePolynomial::scaled(const Rational& c) const {
  RatVec s(c_);
  for (auto& x : s) x *= c;
  return UnivariatePolynomial(std::move(s));
}

void UnivariatePolynomial::divmod(const UnivariatePolynomial& a, const UnivariatePolynomial& b,
                                  UnivariatePolynomial& quotient, UnivariatePolynomial& remainder) {
  if (b.is_zero()) throw DivisionByZeroError("polynomial division by zero");
  RatVec q(a.c_.size() > b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 1, Rational(0));
  RatVec r(a.c_);
  const Rational& lead = b.c_.back();
  while (r.size() >= b.c_.size()) {
    while (!r.empty() && r.back().is_zero()) r.pop_back();
    if (r.size() < b.c_.size()) break;
    Rational f = r.back() / lead;
    std::size_t shift = r.size() - b.c_.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[shift + i] -= f * b.c_[i];
    r.pop_back();
  }
  quotient = UnivariatePolynomial(std::move(q));
  remainder = UnivariatePolynomial(std::move(r));
}

UnivariatePolynomial UnivariatePolynomial::gcd(UnivariatePolynomial a, UnivariatePolynomial b) {
  while (!b.is_zero()) {
    UnivariatePolynomial q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) a = a.scaled(a.leading().reciprocal());
  return a;
}

UnivariatePolynomial UnivariatePolynomial::square_free_part() const {
  if (degree() <= 1) return *this;
  UnivariatePolynomial g = gcd(*this, derivative());
  if (g.degree() == 0) return *this;
  UnivariatePolynomial q, r;
  divmod(*this, g, q, r);
  return q;
}

std::vector<UnivariatePolynomial> sturm_sequence(const UnivariatePolynomial& p) {
  std::vector<UnivariatePolynomial> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p);
  UnivariatePolynomial d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d);
  while (chain.back().degree() > 0) {
    UnivariatePolynomial q, r;
    UnivariatePolynomial::divmod(chain[chain.size() - 2], chain.back(), q, r);
    if (r.is_zero()) break;
    chain.push_back(r.scaled(Rational(-1)));
  }
  return chain;
}

namespace {

int sign_variations(const std::vector<UnivariatePolynomial>& chain, const Rational& x) {
  int variations = 0, prev = 0;
  for (const auto& q : chain) {
    int s = q.evaluate(x).sign();
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

struct IsolationContext {
  const UnivariatePolynomial& sf;
  const std::vector<UnivariatePolynomial>& chain;

  int count(const Rational& lo, const Rational& hi) const {
    return sign_variations(chain, lo) - sign_variations(chain, hi);
  }

  // A point in (lo, hi) that is not a root of sf. Bisecting offsets must hit a
  // non-root after at most deg(sf)+1 attempts.
  Rational interior_non_root(const Rational& lo, const Rational& hi) const {
    Rational span = hi - lo;
    Rational frac(1, 2);
    for (int attempt = 0; attempt <= sf.degree() + 1; ++attempt) {
      Rational cand = lo + span * frac;
      if (!sf.evaluate(cand).is_zero()) return cand;
      frac /= Rational(2);
    }
    throw ValidationError("could not find interior evaluation point");
  }

  void isolate(const Rational& lo, const Rational& hi, std::vector<RootInterval>& out) const {
    int n = count(lo, hi);
    if (n == 0) return;
    if (n == 1) {
      out.push_back(RootInterval{lo, hi});
      return;
    }
    Rational mid = interior_non_root(lo, hi);
    isolate(lo, mid, out);
    isolate(mid, hi, out);
  }
};

}  // namespace

int count_distinct_roots(const UnivariatePolynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw ValidationError("root counting on the zero polynomial");
  if (lo >= hi) throw ValidationError("empty interval for root counting");
  UnivariatePolynomial sf = p.square_free_part();
  if (sf.evaluate(lo).is_zero() || sf.evaluate(hi).is_zero())
    throw EndpointIsRootError("interval endpoint is a root");
  auto chain = sturm_sequence(sf);
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

std::vector<RootInterval> isolate_roots(const UnivariatePolynomial& p, const Rational& lo,
                                        const Rational& hi) {
  if (p.is_zero()) throw ValidationError("root isolation on the zero polynomial");
  if (lo >= hi) throw ValidationError("empty interval for root isolation");
  UnivariatePolynomial sf = p.square_free_part();
  if (sf.evaluate(lo).is_zero() || sf.evaluate(hi).is_zero())
    throw EndpointIsRootError("interval endpoint is a root");
  auto chain = sturm_sequence(sf);
  IsolationContext ctx{sf, chain};
  std::vector<RootInterval> out;
  ctx.isolate(lo, hi, out);
  return out;
}

RootInterval refine_root(const UnivariatePolynomial& p, RootInterval interval,
                         const Rational& max_width) {
  if (max_width.sign() <= 0) throw ValidationError("refinement width must be positive");
  UnivariatePolynomial sf = p.square_free_part();
  auto chain = sturm_sequence(sf);
  IsolationContext ctx{sf, chain};
  if (ctx.count(interval.lo, interval.hi) != 1)
    throw ValidationError("interval does not isolate a single root");
  while (interval.width() > max_width) {
    Rational mid = ctx.interior_non_root(interval.lo, interval.hi);
    if (ctx.count(interval.lo, mid) == 1)
      interval.hi = mid;
    else
      interval.lo = mid;
  }
  return interval;
}

}  // namespace bssbp
