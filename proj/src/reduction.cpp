#include "bssbp/reduction.hpp"

namespace bssbp {

namespace {

// Expands sum_i (sum_j M[i][j] x_j - v_i)^2 - eps^2 over nvars variables.
MultivariatePolynomial expand_residual_ball(const RatMatrix& M, const RatVec& v, const Rational& eps) {
  const std::size_t nvars = M.cols();
  MultivariatePolynomial q(nvars);
  for (std::size_t i = 0; i < M.rows(); ++i) {
    MultivariatePolynomial row = MultivariatePolynomial::constant(nvars, -v[i]);
    for (std::size_t j = 0; j < nvars; ++j)
      row += MultivariatePolynomial::variable(nvars, j).scaled(M.at(i, j));
    q += row * row;
  }
  q.add_term(MultivariatePolynomial::Exponents(nvars, 0), -(eps * eps));
  return q;
}

// Substitutes x_v = s_{plus[v]} - s_{minus[v]} into q, producing a polynomial
// over split_vars variables.
MultivariatePolynomial compose_with_split(const MultivariatePolynomial& q,
                                          const std::vector<std::size_t>& plus,
                                          const std::vector<std::size_t>& minus,
                                          std::size_t split_vars) {
  MultivariatePolynomial out(split_vars);
  for (const auto& [exps, coeff] : q.terms()) {
    MultivariatePolynomial term = MultivariatePolynomial::constant(split_vars, coeff);
    for (std::size_t v = 0; v < exps.size(); ++v)
      for (unsigned k = 0; k < exps[v]; ++k) {
        MultivariatePolynomial diff = MultivariatePolynomial::variable(split_vars, plus[v]) -
                                      MultivariatePolynomial::variable(split_vars, minus[v]);
        term = term * diff;
      }
    out += term;
  }
  return out;
}

ReducedProblem assemble(const MultivariatePolynomial& ball_split, std::size_t split_vars,
                        RecoverMap recover) {
  ReducedProblem rp;
  rp.recover = recover;
  rp.objective = MultivariatePolynomial(split_vars);
  for (std::size_t i = 0; i < split_vars; ++i) {
    MultivariatePolynomial::Exponents e(split_vars, 0);
    e[i] = 1;
    rp.objective.add_term(e, Rational(1));
  }
  rp.feasible_set.variable_count = split_vars;
  std::vector<SignAtom> conj;
  conj.push_back({ball_split, Relation::LessEq});
  for (std::size_t i = 0; i < split_vars; ++i)
    conj.push_back({MultivariatePolynomial::variable(split_vars, i), Relation::GreaterEq});
  rp.feasible_set.disjuncts.push_back(std::move(conj));
  return rp;
}

}  // namespace

MultivariatePolynomial build_ball_polynomial(const RealInstance& inst) {
  inst.validate();
  return expand_residual_ball(inst.A, inst.y, inst.epsilon);
}

RealInstance realify(const ComplexInstance& inst) {
  inst.validate();
  const std::size_t m = inst.rows(), n = inst.cols();
  RealInstance out;
  out.A = RatMatrix(2 * m, 2 * n);
  out.y.assign(2 * m, Rational(0));
  out.epsilon = inst.epsilon;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out.A.at(2 * i, 2 * j) = inst.A_re.at(i, j);
      out.A.at(2 * i, 2 * j + 1) = -inst.A_im.at(i, j);
      out.A.at(2 * i + 1, 2 * j) = inst.A_im.at(i, j);
      out.A.at(2 * i + 1, 2 * j + 1) = inst.A_re.at(i, j);
    }
    out.y[2 * i] = inst.y_re[i];
    out.y[2 * i + 1] = inst.y_im[i];
  }
  return out;
}

MultivariatePolynomial build_ball_polynomial(const ComplexInstance& inst) {
  RealInstance re = realify(inst);
  return expand_residual_ball(re.A, re.y, re.epsilon);
}

Rational star_norm(const RatVec& interleaved) {
  Rational total(0);
  for (const auto& c : interleaved) total += c.abs();
  return total;
}

ReducedProblem split_abs(const RealInstance& inst) {
  inst.validate();
  const std::size_t n = inst.cols();
  MultivariatePolynomial q = build_ball_polynomial(inst);
  std::vector<std::size_t> plus(n), minus(n);
  for (std::size_t j = 0; j < n; ++j) {
    plus[j] = j;
    minus[j] = n + j;
  }
  MultivariatePolynomial ball = compose_with_split(q, plus, minus, 2 * n);
  return assemble(ball, 2 * n, RecoverMap{RecoverMap::Kind::RealSplit, n});
}

ReducedProblem lift_complex(const ComplexInstance& inst) {
  inst.validate();
  const std::size_t n = inst.cols();
  MultivariatePolynomial q = build_ball_polynomial(inst);
  // Interleaved variable 2j is Re_j with split pair (j, n+j); variable 2j+1
  // is Im_j with split pair (2n+j, 3n+j).
  std::vector<std::size_t> plus(2 * n), minus(2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    plus[2 * j] = j;
    minus[2 * j] = n + j;
    plus[2 * j + 1] = 2 * n + j;
    minus[2 * j + 1] = 3 * n + j;
  }
  MultivariatePolynomial ball = compose_with_split(q, plus, minus, 4 * n);
  return assemble(ball, 4 * n, RecoverMap{RecoverMap::Kind::ComplexSplit, n});
}

}  // namespace bssbp
