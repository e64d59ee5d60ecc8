#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "bssbp/quadratic_number.hpp"
#include "bssbp/rational.hpp"

namespace bssbp {

// Sparse multivariate polynomial over Rational. Terms are keyed by exponent
// vectors of fixed length variable_count(), held in lexicographic order so
// iteration (and therefore serialization) is deterministic. Zero coefficients
// are never stored.
class MultivariatePolynomial {
 public:
  using Exponents = std::vector<unsigned>;
  using TermMap = std::map<Exponents, Rational>;

  explicit MultivariatePolynomial(std::size_t variable_count) : nvars_(variable_count) {}
  static MultivariatePolynomial constant(std::size_t nvars, const Rational& c);
  static MultivariatePolynomial variable(std::size_t nvars, std::size_t index);

  std::size_t variable_count() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned total_degree() const;
  Rational constant_term() const;

  void add_term(const Exponents& exps, const Rational& coeff);

  MultivariatePolynomial& operator+=(const MultivariatePolynomial& o);
  MultivariatePolynomial& operator-=(const MultivariatePolynomial& o);
  friend MultivariatePolynomial operator+(MultivariatePolynomial a, const MultivariatePolynomial& b) { a += b; return a; }
  friend MultivariatePolynomial operator-(MultivariatePolynomial a, const MultivariatePolynomial& b) { a -= b; return a; }
  friend MultivariatePolynomial operator*(const MultivariatePolynomial& a, const MultivariatePolynomial& b);
  MultivariatePolynomial scaled(const Rational& c) const;
  friend MultivariatePolynomial operator-(const MultivariatePolynomial& a) { return a.scaled(Rational(-1)); }

  friend bool operator==(const MultivariatePolynomial& a, const MultivariatePolynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  template <class Scalar>
  Scalar evaluate(const std::vector<Scalar>& point) const {
    if (point.size() != nvars_) throw ValidationError("evaluation point has wrong dimension");
    Scalar total{Rational(0)};
    for (const auto& [exps, coeff] : terms_) {
      Scalar term{coeff};
      for (std::size_t v = 0; v < nvars_; ++v)
        for (unsigned k = 0; k < exps[v]; ++k) term *= point[v];
      total += term;
    }
    return total;
  }

 private:
  std::size_t nvars_;
  TermMap terms_;
};

enum class Relation { Less, LessEq, Eq, GreaterEq, Greater };

// One polynomial sign condition  p(x) rel 0.
struct SignAtom {
  MultivariatePolynomial poly;
  Relation rel;

  template <class Scalar>
  bool holds(const std::vector<Scalar>& point) const {
    int s = poly.evaluate(point).sign();
    switch (rel) {
      case Relation::Less: return s < 0;
      case Relation::LessEq: return s <= 0;
      case Relation::Eq: return s == 0;
      case Relation::GreaterEq: return s >= 0;
      case Relation::Greater: return s > 0;
    }
    return false;
  }
};

// Finite union of conjunctions of sign conditions over a shared variable list.
struct SemialgebraicDescription {
  std::size_t variable_count = 0;
  std::vector<std::vector<SignAtom>> disjuncts;

  void validate() const;

  // Exact membership test; an empty disjunct list describes the empty set,
  // an empty conjunction the whole space.
  template <class Scalar>
  bool contains(const std::vector<Scalar>& point) const {
    for (const auto& conj : disjuncts) {
      bool all = true;
      for (const auto& atom : conj)
        if (!atom.holds(point)) {
          all = false;
          break;
        }
      if (all) return true;
    }
    return false;
  }
};

}  // namespace bssbp
