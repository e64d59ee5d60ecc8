#include "bssbp/optimizer.hpp"

#include <bit>
#include <cstdint>
#include <optional>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bssbp {

namespace {

// Split-variable layout over the working coordinate space. Real instances use
// (w_1..w_N, z_1..z_N); complex instances embed into interleaved realified
// coordinates with block order (Re+, Re-, Im+, Im-).
struct SplitStructure {
  std::size_t coord_count = 0;
  std::vector<std::size_t> coord_of;
  std::vector<int> sign_of;
  std::vector<std::size_t> partner;

  std::size_t count() const { return coord_of.size(); }
};

SplitStructure real_structure(std::size_t n) {
  SplitStructure st;
  st.coord_count = n;
  st.coord_of.resize(2 * n);
  st.sign_of.resize(2 * n);
  st.partner.resize(2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    st.coord_of[j] = j;
    st.sign_of[j] = 1;
    st.partner[j] = n + j;
    st.coord_of[n + j] = j;
    st.sign_of[n + j] = -1;
    st.partner[n + j] = j;
  }
  return st;
}

SplitStructure complex_structure(std::size_t n) {
  SplitStructure st;
  st.coord_count = 2 * n;
  st.coord_of.resize(4 * n);
  st.sign_of.resize(4 * n);
  st.partner.resize(4 * n);
  for (std::size_t j = 0; j < n; ++j) {
    st.coord_of[j] = 2 * j;
    st.sign_of[j] = 1;
    st.partner[j] = n + j;
    st.coord_of[n + j] = 2 * j;
    st.sign_of[n + j] = -1;
    st.partner[n + j] = j;
    st.coord_of[2 * n + j] = 2 * j + 1;
    st.sign_of[2 * n + j] = 1;
    st.partner[2 * n + j] = 3 * n + j;
    st.coord_of[3 * n + j] = 2 * j + 1;
    st.sign_of[3 * n + j] = -1;
    st.partner[3 * n + j] = 2 * n + j;
  }
  return st;
}

std::vector<QuadraticNumber> qn_residual(const RatMatrix& a, const RatVec& y,
                                         const std::vector<QuadraticNumber>& x) {
  std::vector<QuadraticNumber> r(a.rows(), QuadraticNumber(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a.at(i, j).is_zero()) r[i] += QuadraticNumber(a.at(i, j)) * x[j];
    r[i] -= QuadraticNumber(y[i]);
  }
  return r;
}

std::vector<QuadraticNumber> qn_gradient(const RatMatrix& a,
                                         const std::vector<QuadraticNumber>& residual) {
  std::vector<QuadraticNumber> g(a.cols(), QuadraticNumber(0));
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (!a.at(i, j).is_zero()) g[j] += QuadraticNumber(a.at(i, j)) * residual[i];
  return g;
}

QuadraticNumber qn_norm_sq(const std::vector<QuadraticNumber>& v) {
  QuadraticNumber s(0);
  for (const auto& x : v) s += x * x;
  return s;
}

struct Candidate {
  std::uint32_t pattern = 0;  // free split variables
  std::uint32_t support = 0;  // split variables strictly positive at the point
  std::vector<QuadraticNumber> point;
  QuadraticNumber objective;
  QuadraticNumber lambda;
  std::vector<QuadraticNumber> mu;
};

// Characteristic-vector order: the mask whose bit is 0 at the lowest
// differing variable index is the smaller one.
bool charvec_less(std::uint32_t a, std::uint32_t b) {
  if (a == b) return false;
  unsigned bit = static_cast<unsigned>(std::countr_zero(a ^ b));
  return ((a >> bit) & 1u) == 0;
}

int compare_repr(const QuadraticNumber& x, const QuadraticNumber& y) {
  if (int c = compare(x.rational_part(), y.rational_part())) return c;
  if (int c = compare(x.radical_coefficient(), y.radical_coefficient())) return c;
  return compare(x.radicand(), y.radicand());
}

// Strict total order making the canonical selection independent of discovery
// order: objective value, then actual-support cardinality, then support under
// the characteristic-vector order, then point values, then representation,
// then the enumerated pattern itself.
bool better(const Candidate& a, const Candidate& b) {
  if (int c = compare(a.objective, b.objective)) return c < 0;
  int pa = std::popcount(a.support), pb = std::popcount(b.support);
  if (pa != pb) return pa < pb;
  if (a.support != b.support) return charvec_less(a.support, b.support);
  for (std::size_t i = 0; i < a.point.size(); ++i)
    if (int c = compare(a.point[i], b.point[i])) return c < 0;
  for (std::size_t i = 0; i < a.point.size(); ++i)
    if (int c = compare_repr(a.point[i], b.point[i])) return c < 0;
  if (a.pattern != b.pattern) return charvec_less(a.pattern, b.pattern);
  return false;
}

// KKT candidate for one pattern of free split variables, ball active. The
// stationarity system restricted to the support S with signs sigma reads
// A_S^T (A_S x - y) = -t sigma with t = 1/(2 lambda) > 0, so x(t) = x0 - t*x1
// with B x0 = A_S^T y and B x1 = sigma for the Gram block B. Substituting
// into ||A_S x - y||^2 = eps^2 leaves t^2 * (sigma^T x1) = eps^2 - ||r0||^2
// because the t-linear term vanishes by the normal equations.
std::optional<Candidate> eval_pattern(std::uint32_t mask, const RatMatrix& a, const RatVec& y,
                                      const Rational& eps_sq, const SplitStructure& st) {
  const std::size_t s = st.count();
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < s; ++i)
    if ((mask >> i) & 1u) {
      if ((mask >> st.partner[i]) & 1u) return std::nullopt;  // w and z both free
      vars.push_back(i);
    }
  const std::size_t k = vars.size();

  RatMatrix asub(a.rows(), k);
  for (std::size_t t = 0; t < k; ++t)
    for (std::size_t r = 0; r < a.rows(); ++r) asub.at(r, t) = a.at(r, st.coord_of[vars[t]]);
  RatMatrix asub_t = asub.transposed();
  RatMatrix b = asub_t * asub;
  RatVec c = mat_vec(asub_t, y);
  RatVec sigma(k);
  for (std::size_t t = 0; t < k; ++t) sigma[t] = Rational(st.sign_of[vars[t]]);

  // Dependent support columns: any minimizer with this support is also
  // attained on an independent subset, which its own pattern finds.
  auto x0 = solve_unique(b, c);
  if (!x0) return std::nullopt;
  auto x1 = solve_unique(b, sigma);
  if (!x1) return std::nullopt;

  RatVec r0 = mat_vec(asub, *x0);
  for (std::size_t i = 0; i < r0.size(); ++i) r0[i] -= y[i];
  Rational quad = dot(sigma, *x1);  // = ||A_S x1||^2, positive definite Gram
  if (quad.sign() <= 0) return std::nullopt;
  Rational d = (eps_sq - norm_sq(r0)) / quad;
  if (d.sign() <= 0) return std::nullopt;  // no finite positive ball multiplier

  QuadraticNumber root = QuadraticNumber::sqrt_of(d);
  Candidate cand;
  cand.pattern = mask;
  cand.point.assign(st.coord_count, QuadraticNumber(0));
  cand.objective = QuadraticNumber(0);
  for (std::size_t t = 0; t < k; ++t) {
    QuadraticNumber xt = QuadraticNumber((*x0)[t]) - root * QuadraticNumber((*x1)[t]);
    QuadraticNumber signed_val = st.sign_of[vars[t]] > 0 ? xt : -xt;
    int sg = signed_val.sign();
    if (sg < 0) return std::nullopt;  // split variable would go negative
    if (sg > 0) cand.support |= (1u << vars[t]);
    cand.point[st.coord_of[vars[t]]] = xt;
    cand.objective += signed_val;
  }

  std::vector<QuadraticNumber> g = qn_gradient(a, qn_residual(a, y, cand.point));
  QuadraticNumber root_inv = root.reciprocal();
  cand.mu.assign(s, QuadraticNumber(0));
  for (std::size_t i = 0; i < s; ++i) {
    if ((mask >> i) & 1u) continue;  // free variable, mu = 0
    QuadraticNumber gi = g[st.coord_of[i]];
    QuadraticNumber m = QuadraticNumber(1) + (st.sign_of[i] > 0 ? gi : -gi) * root_inv;
    if (m.sign() < 0) return std::nullopt;
    cand.mu[i] = m;
  }
  cand.lambda = QuadraticNumber(Rational(1, 2)) * root_inv;
  return cand;
}

Solution zero_solution(const RatVec& y, const Rational& eps_sq, const SplitStructure& st,
                       bool complex_lift) {
  Solution sol;
  sol.point.assign(st.coord_count, QuadraticNumber(0));
  sol.objective_value = QuadraticNumber(0);
  sol.ball_multiplier = QuadraticNumber(0);
  sol.nonneg_multipliers.assign(st.count(), QuadraticNumber(1));
  if (norm_sq(y) == eps_sq) sol.active_set.push_back(0);
  for (std::size_t i = 0; i < st.count(); ++i) sol.active_set.push_back(i + 1);
  sol.complex_lift = complex_lift;
  return sol;
}

// Independent rows of the normal-equation system A^T A x = A^T y; the system
// is consistent, so dependent rows carry no information.
struct EqualitySystem {
  RatMatrix rows;  // rho x n, full row rank
  RatVec rhs;
};

EqualitySystem equality_system(const RatMatrix& a, const RatVec& y) {
  RatMatrix at = a.transposed();
  RatMatrix gram = at * a;
  RatVec h0 = mat_vec(at, y);
  std::vector<std::size_t> keep = independent_rows(gram);
  EqualitySystem es;
  es.rows = RatMatrix(keep.size(), a.cols());
  es.rhs.resize(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) es.rows.at(i, j) = gram.at(keep[i], j);
    es.rhs[i] = h0[keep[i]];
  }
  return es;
}

Rational dual_edge_value(const EqualitySystem& es, std::size_t coord, const RatVec& pi) {
  Rational v(0);
  for (std::size_t r = 0; r < es.rows.rows(); ++r) v += es.rows.at(r, coord) * pi[r];
  return v;
}

// Slater fails when the minimal residual equals eps exactly: the feasible set
// collapses to the least-squares affine set {x : A^T A x = A^T y}. Minimizing
// the l1 norm there is a rational LP; vertices are enumerated directly and an
// optimal dual vertex supplies the multipliers.
Solution solve_degenerate(const RatMatrix& a, const RatVec& y, const SplitStructure& st,
                          bool complex_lift) {
  EqualitySystem es = equality_system(a, y);
  const std::size_t rho = es.rows.rows();
  const std::size_t s = st.count();
  const std::size_t n = a.cols();

  std::optional<Candidate> best;
  const std::uint32_t total = std::uint32_t{1} << s;
  for (std::uint32_t mask = 1; mask < total; ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) > rho) continue;
    std::vector<std::size_t> vars;
    bool overlap = false;
    for (std::size_t i = 0; i < s && !overlap; ++i)
      if ((mask >> i) & 1u) {
        if ((mask >> st.partner[i]) & 1u) overlap = true;
        vars.push_back(i);
      }
    if (overlap) continue;
    RatMatrix cols(rho, vars.size());
    for (std::size_t t = 0; t < vars.size(); ++t)
      for (std::size_t r = 0; r < rho; ++r)
        cols.at(r, t) = Rational(st.sign_of[vars[t]]) * es.rows.at(r, st.coord_of[vars[t]]);
    auto u = solve_unique(cols, es.rhs);  // vertex: full column rank and consistent
    if (!u) continue;
    bool nonneg = true;
    for (const auto& ut : *u)
      if (ut.sign() < 0) {
        nonneg = false;
        break;
      }
    if (!nonneg) continue;

    Candidate cand;
    cand.pattern = mask;
    cand.point.assign(st.coord_count, QuadraticNumber(0));
    Rational obj(0);
    for (std::size_t t = 0; t < vars.size(); ++t) {
      obj += (*u)[t];
      if ((*u)[t].sign() > 0) cand.support |= (1u << vars[t]);
      Rational xv = Rational(st.sign_of[vars[t]]) * (*u)[t];
      cand.point[st.coord_of[vars[t]]] = QuadraticNumber(xv);
    }
    cand.objective = QuadraticNumber(obj);
    if (!best || better(cand, *best)) best = std::move(cand);
  }
  if (!best) throw Error("equality-path enumeration found no vertex");

  Rational opt = best->objective.as_rational();

  // Optimal dual vertex of {pi : |(G_R^T pi)_j| <= 1}: rho active bounds with
  // independent normals, dual objective h^T pi equal to the primal optimum.
  std::optional<RatVec> dual;
  std::vector<std::size_t> combo(rho);
  for (std::size_t i = 0; i < rho; ++i) combo[i] = i;
  auto advance = [&]() -> bool {
    std::size_t i = rho;
    while (i > 0) {
      --i;
      if (combo[i] + (rho - i) < n) {
        ++combo[i];
        for (std::size_t j = i + 1; j < rho; ++j) combo[j] = combo[j - 1] + 1;
        return true;
      }
    }
    return false;
  };
  if (rho > n) throw Error("equality system wider than coordinate space");
  while (!dual) {
    for (std::uint32_t signs = 0; signs < (std::uint32_t{1} << rho) && !dual; ++signs) {
      RatMatrix m(rho, rho);
      RatVec rhs(rho);
      for (std::size_t t = 0; t < rho; ++t) {
        for (std::size_t r = 0; r < rho; ++r) m.at(t, r) = es.rows.at(r, combo[t]);
        rhs[t] = Rational(((signs >> t) & 1u) ? -1 : 1);
      }
      auto pi = solve_unique(m, rhs);
      if (!pi) continue;
      if (dot(es.rhs, *pi) != opt) continue;
      bool inside = true;
      for (std::size_t j = 0; j < n && inside; ++j)
        if (dual_edge_value(es, j, *pi).abs() > Rational(1)) inside = false;
      if (inside) dual = std::move(pi);
    }
    if (!dual && !advance()) break;
  }
  if (!dual) throw Error("no optimal dual vertex found");

  Solution sol;
  sol.point = best->point;
  sol.objective_value = best->objective;
  sol.ball_multiplier = QuadraticNumber(0);
  sol.degenerate = true;
  sol.complex_lift = complex_lift;
  sol.equality_multipliers.reserve(rho);
  for (const auto& p : *dual) sol.equality_multipliers.emplace_back(p);
  sol.nonneg_multipliers.assign(s, QuadraticNumber(0));
  for (std::size_t i = 0; i < s; ++i) {
    Rational gp = dual_edge_value(es, st.coord_of[i], *dual);
    Rational m = Rational(1) - (st.sign_of[i] > 0 ? gp : -gp);
    if (m.sign() < 0) throw Error("dual vertex violates reduced-cost bounds");
    if (((best->support >> i) & 1u) && !m.is_zero())
      throw Error("complementary slackness violated at the selected vertex");
    sol.nonneg_multipliers[i] = QuadraticNumber(m);
  }
  sol.active_set.push_back(0);
  for (std::size_t i = 0; i < s; ++i)
    if (!((best->support >> i) & 1u)) sol.active_set.push_back(i + 1);
  return sol;
}

std::optional<Candidate> enumerate_serial(const RatMatrix& a, const RatVec& y,
                                          const Rational& eps_sq, const SplitStructure& st) {
  std::optional<Candidate> best;
  const std::uint32_t total = std::uint32_t{1} << st.count();
  for (std::uint32_t mask = 1; mask < total; ++mask) {
    auto cand = eval_pattern(mask, a, y, eps_sq, st);
    if (cand && (!best || better(*cand, *best))) best = std::move(cand);
  }
  return best;
}

std::optional<Candidate> enumerate_parallel(const RatMatrix& a, const RatVec& y,
                                            const Rational& eps_sq, const SplitStructure& st) {
#ifdef _OPENMP
  const long long total = 1ll << st.count();
  int threads = omp_get_max_threads();
  std::vector<std::optional<Candidate>> local(static_cast<std::size_t>(threads));
#pragma omp parallel num_threads(threads)
  {
    std::optional<Candidate> mine;
#pragma omp for schedule(dynamic, 64)
    for (long long mask = 1; mask < total; ++mask) {
      auto cand = eval_pattern(static_cast<std::uint32_t>(mask), a, y, eps_sq, st);
      if (cand && (!mine || better(*cand, *mine))) mine = std::move(cand);
    }
    local[static_cast<std::size_t>(omp_get_thread_num())] = std::move(mine);
  }
  // The candidate order is total, so the merged minimum is schedule-independent.
  std::optional<Candidate> best;
  for (auto& c : local)
    if (c && (!best || better(*c, *best))) best = std::move(c);
  return best;
#else
  return enumerate_serial(a, y, eps_sq, st);
#endif
}

Solution solve_impl(const RatMatrix& a, const RatVec& y, const Rational& eps,
                    const SplitStructure& st, bool complex_lift, ExecutionPolicy policy) {
  if (st.count() > 24)
    throw BudgetExceededError("active-set enumeration over " + std::to_string(st.count()) +
                              " split variables exceeds the 24-variable limit");
  Rational eps_sq = eps * eps;
  LeastSquares ls = least_squares(a, y);
  if (ls.residual_sq > eps_sq)
    throw InfeasibleError("noise ball misses the measurement range: minimal squared residual " +
                          ls.residual_sq.to_string() + " > " + eps_sq.to_string());
  if (norm_sq(y) <= eps_sq) return zero_solution(y, eps_sq, st, complex_lift);
  if (ls.residual_sq == eps_sq) return solve_degenerate(a, y, st, complex_lift);

  std::optional<Candidate> best = policy == ExecutionPolicy::Parallel
                                      ? enumerate_parallel(a, y, eps_sq, st)
                                      : enumerate_serial(a, y, eps_sq, st);
  if (!best) throw Error("active-set enumeration found no KKT point");

  Solution sol;
  sol.point = std::move(best->point);
  sol.objective_value = std::move(best->objective);
  sol.ball_multiplier = std::move(best->lambda);
  sol.nonneg_multipliers = std::move(best->mu);
  sol.complex_lift = complex_lift;
  sol.active_set.push_back(0);
  for (std::size_t i = 0; i < st.count(); ++i)
    if (!((best->support >> i) & 1u)) sol.active_set.push_back(i + 1);
  return sol;
}

bool certify_impl(const RatMatrix& a, const RatVec& y, const Rational& eps,
                  const SplitStructure& st, const Solution& sol) {
  const std::size_t s = st.count();
  if (sol.point.size() != st.coord_count) return false;
  if (sol.nonneg_multipliers.size() != s) return false;
  Rational eps_sq = eps * eps;

  // Split values: exact positive/negative parts of the point.
  std::vector<QuadraticNumber> u(s, QuadraticNumber(0));
  for (std::size_t i = 0; i < s; ++i) {
    QuadraticNumber v = st.sign_of[i] > 0 ? sol.point[st.coord_of[i]] : -sol.point[st.coord_of[i]];
    if (v.sign() > 0) u[i] = v;
  }

  std::vector<QuadraticNumber> residual = qn_residual(a, y, sol.point);
  QuadraticNumber ball = qn_norm_sq(residual) - QuadraticNumber(eps_sq);
  if (ball.sign() > 0) return false;  // infeasible point

  QuadraticNumber total(0);
  for (const auto& ui : u) total += ui;
  if (compare(total, sol.objective_value) != 0) return false;

  if (sol.ball_multiplier.sign() < 0) return false;
  for (const auto& m : sol.nonneg_multipliers)
    if (m.sign() < 0) return false;

  // Complementary slackness.
  if (sol.ball_multiplier.sign() > 0 && ball.sign() != 0) return false;
  for (std::size_t i = 0; i < s; ++i)
    if (u[i].sign() > 0 && sol.nonneg_multipliers[i].sign() != 0) return false;

  // Claimed active set must match the point exactly.
  bool claimed_ball = false;
  std::vector<bool> claimed(s, false);
  for (std::size_t idx : sol.active_set) {
    if (idx == 0) {
      claimed_ball = true;
      if (ball.sign() != 0) return false;
    } else {
      if (idx > s) return false;
      claimed[idx - 1] = true;
      if (u[idx - 1].sign() != 0) return false;
    }
  }
  if (!claimed_ball && ball.sign() == 0) return false;
  for (std::size_t i = 0; i < s; ++i)
    if (!claimed[i] && u[i].sign() == 0) return false;

  std::vector<QuadraticNumber> g = qn_gradient(a, residual);
  if (!sol.degenerate) {
    if (!sol.equality_multipliers.empty()) return false;
    QuadraticNumber two_lambda = sol.ball_multiplier + sol.ball_multiplier;
    for (std::size_t i = 0; i < s; ++i) {
      QuadraticNumber gi = g[st.coord_of[i]];
      QuadraticNumber expected =
          QuadraticNumber(1) + (st.sign_of[i] > 0 ? gi : -gi) * two_lambda;
      if (compare(expected, sol.nonneg_multipliers[i]) != 0) return false;
    }
  } else {
    if (sol.ball_multiplier.sign() != 0) return false;
    if (least_squares(a, y).residual_sq != eps_sq) return false;
    EqualitySystem es = equality_system(a, y);
    if (sol.equality_multipliers.size() != es.rows.rows()) return false;
    for (std::size_t i = 0; i < s; ++i) {
      QuadraticNumber gp(0);
      for (std::size_t r = 0; r < es.rows.rows(); ++r)
        gp += QuadraticNumber(es.rows.at(r, st.coord_of[i])) * sol.equality_multipliers[r];
      QuadraticNumber expected = QuadraticNumber(1) - (st.sign_of[i] > 0 ? gp : -gp);
      if (compare(expected, sol.nonneg_multipliers[i]) != 0) return false;
    }
  }
  return true;
}

// Unconstrained exact minimum of a quadratic polynomial that is a sum of
// squares plus a constant; used to recover the feasibility margin from a
// reduced problem's ball atom.
Rational quadratic_min(const MultivariatePolynomial& q) {
  const std::size_t s = q.variable_count();
  RatMatrix quad(s, s);
  RatVec lin(s, Rational(0));
  Rational constant(0);
  for (const auto& [exps, coeff] : q.terms()) {
    std::vector<std::size_t> where;
    unsigned deg = 0;
    for (std::size_t v = 0; v < s; ++v) {
      deg += exps[v];
      if (exps[v] > 0) where.push_back(v);
    }
    if (deg == 0) {
      constant = coeff;
    } else if (deg == 1) {
      lin[where[0]] += coeff;
    } else if (deg == 2) {
      if (where.size() == 1) {
        quad.at(where[0], where[0]) += coeff;
      } else {
        Rational half = coeff / Rational(2);
        quad.at(where[0], where[1]) += half;
        quad.at(where[1], where[0]) += half;
      }
    } else {
      throw ValidationError("ball atom has degree above 2");
    }
  }
  RatMatrix grad = quad;  // stationarity: 2 Q u = -lin
  RatVec rhs(s);
  for (std::size_t i = 0; i < s; ++i) {
    rhs[i] = -lin[i];
    for (std::size_t j = 0; j < s; ++j) grad.at(i, j) += quad.at(i, j);
  }
  LinearSolveResult sol = solve_general(grad, rhs);
  if (!sol.consistent) throw ValidationError("ball atom is not a residual form");
  Rational value = constant + dot(lin, sol.particular);
  value += dot(sol.particular, mat_vec(quad, sol.particular));
  return value;
}

}  // namespace

FeasibilityReport check_feasible(const RealInstance& inst) {
  inst.validate();
  FeasibilityReport rep;
  rep.min_residual_sq = least_squares(inst.A, inst.y).residual_sq;
  rep.status = rep.min_residual_sq > inst.epsilon * inst.epsilon ? FeasibilityStatus::Empty
                                                                 : FeasibilityStatus::Feasible;
  return rep;
}

FeasibilityReport check_feasible(const ComplexInstance& inst) {
  return check_feasible(realify(inst));
}

FeasibilityReport check_feasible(const ReducedProblem& rp, const Rational& epsilon) {
  if (epsilon.sign() <= 0) throw ValidationError("noise bound must be positive");
  rp.feasible_set.validate();
  if (rp.feasible_set.disjuncts.size() != 1 || rp.feasible_set.disjuncts[0].empty())
    throw ValidationError("expected a single ball-plus-orthant conjunction");
  const SignAtom& ball = rp.feasible_set.disjuncts[0][0];
  if (ball.rel != Relation::LessEq) throw ValidationError("ball atom must be a <= condition");
  // min over the split orthant equals min over all of R^S: the recover map is
  // onto, and the ball depends on split variables only through it.
  Rational margin = quadratic_min(ball.poly);
  FeasibilityReport rep;
  rep.min_residual_sq = margin + epsilon * epsilon;
  rep.status = margin.sign() > 0 ? FeasibilityStatus::Empty : FeasibilityStatus::Feasible;
  return rep;
}

Solution solve(const RealInstance& inst, ExecutionPolicy policy) {
  inst.validate();
  return solve_impl(inst.A, inst.y, inst.epsilon, real_structure(inst.cols()), false, policy);
}

Solution solve_complex(const ComplexInstance& inst, ExecutionPolicy policy) {
  inst.validate();
  RealInstance emb = realify(inst);
  return solve_impl(emb.A, emb.y, emb.epsilon, complex_structure(inst.cols()), true, policy);
}

bool certify(const RealInstance& inst, const Solution& sol) {
  try {
    inst.validate();
    if (sol.complex_lift) return false;
    return certify_impl(inst.A, inst.y, inst.epsilon, real_structure(inst.cols()), sol);
  } catch (...) {
    return false;
  }
}

bool certify(const ComplexInstance& inst, const Solution& sol) {
  try {
    inst.validate();
    if (!sol.complex_lift) return false;
    RealInstance emb = realify(inst);
    return certify_impl(emb.A, emb.y, emb.epsilon, complex_structure(inst.cols()), sol);
  } catch (...) {
    return false;
  }
}

}  // namespace bssbp
