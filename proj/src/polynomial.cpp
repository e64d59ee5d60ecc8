#include "bssbp/polynomial.hpp"

#include <numeric>

namespace bssbp {

MultivariatePolynomial MultivariatePolynomial::constant(std::size_t nvars, const Rational& c) {
  MultivariatePolynomial p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

MultivariatePolynomial MultivariatePolynomial::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw ValidationError("variable index out of range");
  MultivariatePolynomial p(nvars);
  Exponents e(nvars, 0);
  e[index] = 1;
  p.add_term(e, Rational(1));
  return p;
}

unsigned MultivariatePolynomial::total_degree() const {
  unsigned best = 0;
  for (const auto& [exps, coeff] : terms_) {
    unsigned d = std::accumulate(exps.begin(), exps.end(), 0u);
    if (d > best) best = d;
  }
  return best;
}

Rational MultivariatePolynomial::constant_term() const {
  auto it = terms_.find(Exponents(nvars_, 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultivariatePolynomial::add_term(const Exponents& exps, const Rational& coeff) {
  if (exps.size() != nvars_) throw ValidationError("exponent vector has wrong length");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultivariatePolynomial& MultivariatePolynomial::operator+=(const MultivariatePolynomial& o) {
  if (o.nvars_ != nvars_) throw ValidationError("polynomial variable counts differ");
  for (const auto& [exps, coeff] : o.terms_) add_term(exps, coeff);
  return *this;
}

MultivariatePolynomial& MultivariatePolynomial::operator-=(const MultivariatePolynomial& o) {
  if (o.nvars_ != nvars_) throw ValidationError("polynomial variable counts differ");
  for (const auto& [exps, coeff] : o.terms_) add_term(exps, -coeff);
  return *this;
}

MultivariatePolynomial operator*(const MultivariatePolynomial& a, const MultivariatePolynomial& b) {
  if (a.nvars_ != b.nvars_) throw ValidationError("polynomial variable counts differ");
  MultivariatePolynomial out(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      MultivariatePolynomial::Exponents e(a.nvars_);
      for (std::size_t v = 0; v < a.nvars_; ++v) e[v] = ea[v] + eb[v];
      out.add_term(e, ca * cb);
    }
  return out;
}

MultivariatePolynomial MultivariatePolynomial::scaled(const Rational& c) const {
  MultivariatePolynomial out(nvars_);
  if (c.is_zero()) return out;
  for (const auto& [exps, coeff] : terms_) out.terms_.emplace(exps, coeff * c);
  return out;
}

void SemialgebraicDescription::validate() const {
  for (const auto& conj : disjuncts)
    for (const auto& atom : conj)
      if (atom.poly.variable_count() != variable_count)
        throw ValidationError("sign condition over wrong variable count");
}

}  // namespace bssbp
