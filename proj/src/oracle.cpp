#include "bssbp/optimizer.hpp"
#include "bssbp/reduction.hpp"

#include <queue>
#include <utility>
#include <vector>

namespace bssbp {

namespace {

RatVec residual_vec(const RatMatrix& a, const RatVec& y, const RatVec& x) {
  RatVec r = mat_vec(a, x);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= y[i];
  return r;
}

struct Box {
  RatVec lo, hi;
};

// Distance from the origin to the box in the l1 norm; a valid objective lower
// bound for every point inside.
Rational box_l1_lower(const Box& b) {
  Rational s(0);
  for (std::size_t j = 0; j < b.lo.size(); ++j) {
    if (b.lo[j].sign() > 0)
      s += b.lo[j];
    else if (b.hi[j].sign() < 0)
      s -= b.hi[j];
  }
  return s;
}

RatVec box_center(const Box& b) {
  RatVec c(b.lo.size());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = (b.lo[j] + b.hi[j]) / Rational(2);
  return c;
}

// Every x in the box satisfies ||Ax-y|| >= ||Ac-y|| - sqrt(E) with
// E = sum_i (sum_j |a_ij| rho_j)^2, so the box is infeasible when
// sqrt(R2) - sqrt(E) > eps. Both square roots are eliminated by squaring
// twice; the test is exact and one-sided.
bool provably_infeasible(const RatMatrix& a, const RatVec& y, const Rational& eps_sq,
                         const Box& box, const RatVec& center) {
  Rational r2 = norm_sq(residual_vec(a, y, center));
  Rational e(0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Rational row(0);
    for (std::size_t j = 0; j < a.cols(); ++j)
      row += a.at(i, j).abs() * (box.hi[j] - box.lo[j]) / Rational(2);
    e += row * row;
  }
  Rational lhs = r2 - eps_sq - e;
  if (lhs.sign() <= 0) return false;
  return lhs * lhs > Rational(4) * eps_sq * e;
}

void try_point(const RatMatrix& a, const RatVec& y, const Rational& eps_sq, const RatVec& x,
               Rational& upper) {
  if (norm_sq(residual_vec(a, y, x)) > eps_sq) return;
  Rational v = l1_norm(x);
  if (v < upper) upper = v;
}

// Walk from the interior least-squares point toward the box center. Along
// x(s) = xhat + s (c - xhat) the residual is m0 + s^2 ||A(c-xhat)||^2 because
// the cross term dies against the normal equations, so any s below the exact
// feasibility root yields a feasible point.
void try_segment(const RatMatrix& a, const RatVec& y, const Rational& eps_sq, const Rational& m0,
                 const RatVec& xhat, const RatVec& c, Rational& upper) {
  RatVec d(c.size());
  for (std::size_t j = 0; j < d.size(); ++j) d[j] = c[j] - xhat[j];
  Rational denom = norm_sq(mat_vec(a, d));
  if (denom.is_zero()) return;  // c itself was already tested
  Rational ratio = (eps_sq - m0) / denom;
  if (ratio.sign() <= 0) return;
  Rational lo, hi;
  sqrt_bounds(ratio, 64, lo, hi);
  Rational s = lo;
  if (s > Rational(1)) s = Rational(1);
  if (s.sign() <= 0) return;
  RatVec x = xhat;
  for (std::size_t j = 0; j < x.size(); ++j) x[j] += s * d[j];
  try_point(a, y, eps_sq, x, upper);
}

// Exact orthogonal projection of the box center onto the least-squares affine
// set xhat + span(kernel); used when the feasible set has empty interior.
void try_projection(const RatMatrix& a, const RatVec& y, const Rational& eps_sq,
                    const RatVec& xhat, const std::vector<RatVec>& kernel, const RatVec& c,
                    Rational& upper) {
  const std::size_t k = kernel.size();
  RatMatrix gram(k, k);
  RatVec rhs(k);
  RatVec diff(c.size());
  for (std::size_t j = 0; j < c.size(); ++j) diff[j] = c[j] - xhat[j];
  for (std::size_t p = 0; p < k; ++p) {
    rhs[p] = dot(kernel[p], diff);
    for (std::size_t q = 0; q < k; ++q) gram.at(p, q) = dot(kernel[p], kernel[q]);
  }
  auto alpha = solve_unique(gram, rhs);
  if (!alpha) return;
  RatVec x = xhat;
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t j = 0; j < x.size(); ++j) x[j] += (*alpha)[p] * kernel[p][j];
  try_point(a, y, eps_sq, x, upper);
}

// ---- dual lower bound ----
//
// For admissible v (||A^T v||_inf <= 1) weak duality gives
// min ||x||_1 >= <v, y> - eps ||v||_2, so any rational v with an upper bound
// on its Euclidean norm produces a sound objective lower bound. With one or
// two rows the admissible set is an interval or a polygon and near-optimal
// candidates can be written down directly.

Rational phi_lower(const RatVec& v, const RatVec& y, const Rational& eps) {
  Rational lo, hi;
  sqrt_bounds(norm_sq(v), 64, lo, hi);
  return dot(v, y) - eps * hi;
}

struct Line {
  RatVec normal;  // <normal, v> = offset
  Rational offset;
};

void line_geometry(const Line& ln, RatVec& p, RatVec& u) {
  p.assign(2, Rational(0));
  if (!ln.normal[0].is_zero())
    p[0] = ln.offset / ln.normal[0];
  else
    p[1] = ln.offset / ln.normal[1];
  u = {-ln.normal[1], ln.normal[0]};
}

// Stationary points of <v,y> - eps ||v|| along the line p + s u: squaring
// <u,y> ||v(s)|| = eps (<p,u> + s ||u||^2) leaves a quadratic in s. The roots
// only seed candidates, so a 64-bit approximation of an irrational root is
// fine; membership and the bound itself stay exact.
void add_stationary(const Line& ln, const RatVec& y, const Rational& eps_sq,
                    std::vector<RatVec>& out) {
  RatVec p, u;
  line_geometry(ln, p, u);
  Rational uy = dot(u, y), uu = dot(u, u), pu = dot(p, u), pp = dot(p, p);
  Rational alpha = uy * uy * uu - eps_sq * uu * uu;
  Rational beta = Rational(2) * pu * (uy * uy - eps_sq * uu);
  Rational gamma = uy * uy * pp - eps_sq * pu * pu;
  std::vector<Rational> roots;
  if (alpha.is_zero()) {
    if (!beta.is_zero()) roots.push_back(-gamma / beta);
  } else {
    Rational disc = beta * beta - Rational(4) * alpha * gamma;
    if (disc.sign() < 0) return;
    Rational sq;
    if (!exact_sqrt(disc, sq)) {
      Rational lo, hi;
      sqrt_bounds(disc, 64, lo, hi);
      sq = (lo + hi) / Rational(2);
    }
    Rational twoa = Rational(2) * alpha;
    roots.push_back((-beta + sq) / twoa);
    roots.push_back((-beta - sq) / twoa);
  }
  for (const Rational& s : roots) out.push_back({p[0] + s * u[0], p[1] + s * u[1]});
}

Rational dual_lower_bound(const RatMatrix& a, const RatVec& y, const Rational& eps,
                          const Rational& upper_hint, const Rational& tol) {
  Rational best(0);  // v = 0 is always admissible
  const std::size_t m = a.rows(), n = a.cols();
  if (m == 1) {
    Rational maxa(0);
    for (std::size_t j = 0; j < n; ++j)
      if (a.at(0, j).abs() > maxa) maxa = a.at(0, j).abs();
    if (maxa.is_zero()) return best;
    for (int s : {1, -1}) {
      Rational v = Rational(s) / maxa;
      Rational phi = v * y[0] - eps * v.abs();
      if (phi > best) best = phi;
    }
    return best;
  }
  if (m != 2) return best;  // box bounds alone must close the gap

  Rational eps_sq = eps * eps;
  std::vector<Line> walls;
  for (std::size_t j = 0; j < n; ++j) {
    RatVec col{a.at(0, j), a.at(1, j)};
    if (col[0].is_zero() && col[1].is_zero()) continue;
    walls.push_back({col, Rational(1)});
    walls.push_back({col, Rational(-1)});
  }

  Rational box(1);
  for (int round = 0; round <= 20; ++round, box += box) {
    std::vector<Line> lines = walls;
    lines.push_back({{Rational(1), Rational(0)}, box});
    lines.push_back({{Rational(1), Rational(0)}, -box});
    lines.push_back({{Rational(0), Rational(1)}, box});
    lines.push_back({{Rational(0), Rational(1)}, -box});

    std::vector<RatVec> cands;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      add_stationary(lines[i], y, eps_sq, cands);
      for (std::size_t j = i + 1; j < lines.size(); ++j) {
        RatMatrix m2 = RatMatrix::from_rows({lines[i].normal, lines[j].normal});
        auto v = solve_unique(m2, {lines[i].offset, lines[j].offset});
        if (v) cands.push_back(std::move(*v));
      }
    }
    for (const RatVec& v : cands) {
      if (v[0].abs() > box || v[1].abs() > box) continue;
      bool ok = true;
      for (std::size_t j = 0; j < n && ok; ++j)
        if ((a.at(0, j) * v[0] + a.at(1, j) * v[1]).abs() > Rational(1)) ok = false;
      if (!ok) continue;
      Rational phi = phi_lower(v, y, eps);
      if (phi > best) best = phi;
    }
    if (upper_hint - best <= tol) break;
  }
  return best;
}

struct HeapItem {
  Rational bound;
  long seq;
  Box box;
};

struct HeapOrder {
  bool operator()(const HeapItem& a, const HeapItem& b) const {
    int c = compare(a.bound, b.bound);
    if (c != 0) return c > 0;  // min-heap on the bound
    return a.seq > b.seq;
  }
};

}  // namespace

OracleBracket oracle_solve(const RealInstance& inst, const Rational& tol, long budget) {
  inst.validate();
  if (tol.sign() <= 0) throw ValidationError("oracle tolerance must be positive");
  if (budget <= 0) throw ValidationError("oracle budget must be positive");

  Rational eps_sq = inst.epsilon * inst.epsilon;
  LeastSquares ls = least_squares(inst.A, inst.y);
  if (ls.residual_sq > eps_sq)
    throw InfeasibleError("noise ball misses the measurement range: minimal squared residual " +
                          ls.residual_sq.to_string() + " > " + eps_sq.to_string());
  if (norm_sq(inst.y) <= eps_sq) return OracleBracket{Rational(0), Rational(0)};

  const RatVec& xhat = ls.point;
  bool flat = ls.residual_sq == eps_sq;  // feasible set has empty interior
  std::vector<RatVec> kernel;
  if (flat) {
    RatMatrix at = inst.A.transposed();
    kernel = solve_general(at * inst.A, mat_vec(at, inst.y)).kernel;
    if (kernel.empty()) {
      Rational v = l1_norm(xhat);
      return OracleBracket{v, v};
    }
  }

  Rational upper = l1_norm(xhat);
  Rational dual_lb = dual_lower_bound(inst.A, inst.y, inst.epsilon, upper, tol);
  if (dual_lb.sign() < 0) dual_lb = Rational(0);

  Box root;
  root.lo.assign(inst.cols(), -upper);
  root.hi.assign(inst.cols(), upper);
  std::priority_queue<HeapItem, std::vector<HeapItem>, HeapOrder> heap;
  long seq = 0;
  heap.push({box_l1_lower(root), seq++, std::move(root)});

  long pops = 0;
  while (true) {
    Rational heap_lower = heap.empty() ? upper : heap.top().bound;
    if (heap_lower > upper) heap_lower = upper;
    Rational lower = dual_lb > heap_lower ? dual_lb : heap_lower;
    if (lower > upper) lower = upper;
    if (upper - lower <= tol) return OracleBracket{lower, upper};
    if (++pops > budget)
      throw BudgetExceededError("oracle bracket still wider than the tolerance after " +
                                std::to_string(budget) + " box expansions");

    Box box = heap.top().box;
    Rational bound = heap.top().bound;
    heap.pop();
    if (bound >= upper) continue;
    RatVec c = box_center(box);
    if (provably_infeasible(inst.A, inst.y, eps_sq, box, c)) continue;

    try_point(inst.A, inst.y, eps_sq, c, upper);
    if (flat)
      try_projection(inst.A, inst.y, eps_sq, xhat, kernel, c, upper);
    else
      try_segment(inst.A, inst.y, eps_sq, ls.residual_sq, xhat, c, upper);

    std::size_t axis = 0;
    Rational width = box.hi[0] - box.lo[0];
    for (std::size_t j = 1; j < box.lo.size(); ++j) {
      Rational w = box.hi[j] - box.lo[j];
      if (w > width) {
        width = w;
        axis = j;
      }
    }
    if (width.is_zero()) continue;  // a point; fully handled above
    Rational mid = (box.lo[axis] + box.hi[axis]) / Rational(2);
    Box left = box, right = std::move(box);
    left.hi[axis] = mid;
    right.lo[axis] = mid;
    Rational lb = box_l1_lower(left);
    if (lb < upper) heap.push({std::move(lb), seq++, std::move(left)});
    Rational rb = box_l1_lower(right);
    if (rb < upper) heap.push({std::move(rb), seq++, std::move(right)});
  }
}

OracleBracket oracle_solve(const ComplexInstance& inst, const Rational& tol, long budget) {
  inst.validate();
  return oracle_solve(realify(inst), tol, budget);
}

}  // namespace bssbp
