#pragma once

#include "bssbp/instance.hpp"
#include "bssbp/quadratic_number.hpp"
#include "bssbp/reduction.hpp"

namespace bssbp {

enum class FeasibilityStatus { Empty, Feasible };

struct FeasibilityReport {
  FeasibilityStatus status = FeasibilityStatus::Feasible;
  Rational min_residual_sq;  // squared l2 distance of y from the range of A
};

FeasibilityReport check_feasible(const RealInstance& inst);
FeasibilityReport check_feasible(const ComplexInstance& inst);
// The reduced form folds epsilon^2 into the ball atom's constant term, so the
// noise bound is passed alongside to reconstruct min_residual_sq.
FeasibilityReport check_feasible(const ReducedProblem& rp, const Rational& epsilon);

enum class ExecutionPolicy { Serial, Parallel };

// Exact minimizer with its KKT evidence. Split variables are ordered
// (w_1..w_N, z_1..z_N) for real instances and (Re+_1..Re+_N, Re-_1..Re-_N,
// Im+_1..Im+_N, Im-_1..Im-_N) for complex ones; active_set entry 0 is the
// ball constraint and entry i >= 1 says split variable i-1 sits at zero.
//
// Non-degenerate solutions certify against the ball Lagrangian
//   mu_i = 1 + sign_i * 2 * lambda * (A^T (A x - y))_{coord_i}.
// Degenerate solutions (the feasible set is the least-squares affine set)
// carry one multiplier per independent normal-equation row instead, with
// lambda = 0:
//   mu_i = 1 - sign_i * (G_R^T nu)_{coord_i}.
struct Solution {
  std::vector<QuadraticNumber> point;  // N entries; complex: 2N interleaved Re/Im
  QuadraticNumber objective_value;
  std::vector<std::size_t> active_set;
  QuadraticNumber ball_multiplier;
  std::vector<QuadraticNumber> nonneg_multipliers;    // one per split variable
  std::vector<QuadraticNumber> equality_multipliers;  // degenerate path only
  bool degenerate = false;
  bool complex_lift = false;
};

// Exact l1 minimization over {x : ||Ax - y||_2 <= eps} by KKT active-set
// enumeration. Throws InfeasibleError when the ball misses the range of A and
// BudgetExceededError when the instance has more than 24 split variables.
Solution solve(const RealInstance& inst, ExecutionPolicy policy = ExecutionPolicy::Parallel);

// Star-norm minimization for complex data via the real embedding; the
// returned point holds 2N interleaved (Re, Im) coordinates.
Solution solve_complex(const ComplexInstance& inst, ExecutionPolicy policy = ExecutionPolicy::Parallel);

// Exact recheck of a claimed solution: feasibility, stationarity,
// complementary slackness, multiplier signs, objective consistency.
// Returns false (never throws) on any violation or malformed certificate.
bool certify(const RealInstance& inst, const Solution& sol);
bool certify(const ComplexInstance& inst, const Solution& sol);

struct OracleBracket {
  Rational lower;
  Rational upper;
};

inline constexpr long kDefaultOracleBudget = 500000;

// Independent bracketing of the optimal objective by branch-and-bound over
// boxes with exact rational bounds; no KKT machinery shared with solve.
// Returns [lower, upper] with upper - lower <= tol.
OracleBracket oracle_solve(const RealInstance& inst, const Rational& tol,
                           long budget = kDefaultOracleBudget);
OracleBracket oracle_solve(const ComplexInstance& inst, const Rational& tol,
                           long budget = kDefaultOracleBudget);

}  // namespace bssbp
