#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "bssbp/optimizer.hpp"
#include "test_util.hpp"

using namespace bssbp;

namespace {

RealInstance real_inst(const std::vector<std::vector<long>>& rows, const std::vector<long>& y,
                       const Rational& eps) {
  RealInstance inst;
  std::vector<RatVec> rs;
  for (const auto& r : rows) {
    RatVec v;
    for (long e : r) v.push_back(Rational(e));
    rs.push_back(std::move(v));
  }
  inst.A = RatMatrix::from_rows(rs);
  for (long e : y) inst.y.push_back(Rational(e));
  inst.epsilon = eps;
  return inst;
}

bool same_repr(const QuadraticNumber& a, const QuadraticNumber& b) {
  return a.rational_part() == b.rational_part() &&
         a.radical_coefficient() == b.radical_coefficient() && a.radicand() == b.radicand();
}

bool same_solution(const Solution& a, const Solution& b) {
  if (a.point.size() != b.point.size()) return false;
  for (std::size_t i = 0; i < a.point.size(); ++i)
    if (!same_repr(a.point[i], b.point[i])) return false;
  if (!same_repr(a.objective_value, b.objective_value)) return false;
  if (a.active_set != b.active_set) return false;
  if (!same_repr(a.ball_multiplier, b.ball_multiplier)) return false;
  if (a.nonneg_multipliers.size() != b.nonneg_multipliers.size()) return false;
  for (std::size_t i = 0; i < a.nonneg_multipliers.size(); ++i)
    if (!same_repr(a.nonneg_multipliers[i], b.nonneg_multipliers[i])) return false;
  if (a.equality_multipliers.size() != b.equality_multipliers.size()) return false;
  for (std::size_t i = 0; i < a.equality_multipliers.size(); ++i)
    if (!same_repr(a.equality_multipliers[i], b.equality_multipliers[i])) return false;
  return a.degenerate == b.degenerate && a.complex_lift == b.complex_lift;
}

RealInstance random_feasible(std::mt19937& gen) {
  for (;;) {
    std::size_t m = 1 + gen() % 2, n = m + 1 + gen() % (3 - m);
    RealInstance inst;
    inst.A = testutil::rand_matrix(gen, m, n, -3, 3, 4);
    inst.y = testutil::rand_vector(gen, m, -3, 3, 4);
    inst.epsilon = (gen() % 2) ? Rational(1, 10) : Rational(1, 2);
    LeastSquares ls = least_squares(inst.A, inst.y);
    if (ls.residual_sq <= inst.epsilon * inst.epsilon) return inst;
  }
}

}  // namespace

TEST_CASE("single row closed form") {
  // A = (1, 2), y = 1, eps = 1/2: put everything on the largest entry,
  // x = (0, (1 - eps)/2) = (0, 1/4)
  RealInstance inst = real_inst({{1, 2}}, {1}, Rational(1, 2));
  Solution s = solve(inst);
  CHECK(s.objective_value == QuadraticNumber(Rational(1, 4)));
  REQUIRE(s.point.size() == 2);
  CHECK(s.point[0].is_zero());
  CHECK(s.point[1].as_rational() == Rational(1, 4));
  CHECK(!s.degenerate);
  CHECK(!s.complex_lift);
  CHECK(s.ball_multiplier.as_rational() == Rational(1, 2));
  REQUIRE(s.nonneg_multipliers.size() == 4);
  CHECK(s.nonneg_multipliers[0].as_rational() == Rational(1, 2));
  CHECK(s.nonneg_multipliers[1].as_rational() == Rational(0));
  CHECK(s.nonneg_multipliers[2].as_rational() == Rational(3, 2));
  CHECK(s.nonneg_multipliers[3].as_rational() == Rational(2));
  CHECK(s.equality_multipliers.empty());
  // ball active, w1, z1, z2 at zero
  CHECK(s.active_set == std::vector<std::size_t>{0, 1, 3, 4});
  CHECK(certify(inst, s));
}

TEST_CASE("tie between coordinates picks the smallest support pattern") {
  RealInstance inst = real_inst({{1, 1}}, {1}, Rational(1, 2));
  Solution s = solve(inst);
  CHECK(s.objective_value == QuadraticNumber(Rational(1, 2)));
  CHECK(s.point[0].is_zero());
  CHECK(s.point[1].as_rational() == Rational(1, 2));
  CHECK(certify(inst, s));
}

TEST_CASE("irrational optimum stays exact") {
  // two measurements force a radical objective
  RealInstance inst = real_inst({{1, 0, 1}, {0, 1, 1}}, {1, 1}, Rational(1, 10));
  Solution s = solve(inst);
  CHECK(!s.objective_value.is_rational());
  CHECK(s.objective_value.rational_part() == Rational(1));
  CHECK(s.objective_value.radical_coefficient() == Rational(-1, 2));
  CHECK(s.objective_value.radicand() == Rational(1, 50));
  // value is 1 - sqrt(2)/20
  QuadraticNumber expect = QuadraticNumber(1) -
      QuadraticNumber(Rational(1, 20)) * QuadraticNumber::sqrt_of(Rational(2));
  CHECK(s.objective_value == expect);
  CHECK(certify(inst, s));
}

TEST_CASE("serial and parallel enumeration agree field for field") {
  std::mt19937 gen(47);
  for (int i = 0; i < 25; ++i) {
    RealInstance inst = random_feasible(gen);
    Solution p = solve(inst, ExecutionPolicy::Parallel);
    Solution q = solve(inst, ExecutionPolicy::Serial);
    CHECK(same_solution(p, q));
  }
}

TEST_CASE("objective scales with the data") {
  std::mt19937 gen(53);
  for (int i = 0; i < 15; ++i) {
    RealInstance inst = random_feasible(gen);
    Rational c(3, 2);
    RealInstance scaled = inst;
    for (std::size_t r = 0; r < scaled.A.rows(); ++r)
      for (std::size_t k = 0; k < scaled.A.cols(); ++k) scaled.A.at(r, k) *= c;
    // scaling A by c shrinks the minimizer by 1/c
    Solution a = solve(inst);
    Solution b = solve(scaled);
    CHECK(b.objective_value * QuadraticNumber(c) == a.objective_value);
  }
}

TEST_CASE("zero solution when the ball contains the origin") {
  RealInstance inst = real_inst({{1, 2}}, {1}, Rational(2));
  Solution s = solve(inst);
  CHECK(s.objective_value.is_zero());
  for (const auto& v : s.point) CHECK(v.is_zero());
  CHECK(s.ball_multiplier.is_zero());
  for (const auto& m : s.nonneg_multipliers) CHECK(m.as_rational() == Rational(1));
  // strict interior: ball constraint inactive
  CHECK(std::find(s.active_set.begin(), s.active_set.end(), 0u) == s.active_set.end());
  CHECK(certify(inst, s));

  // boundary case ||y|| = eps keeps the ball active at the origin
  RealInstance edge = real_inst({{1, 2}}, {1}, Rational(1));
  Solution e = solve(edge);
  CHECK(e.objective_value.is_zero());
  CHECK(std::find(e.active_set.begin(), e.active_set.end(), 0u) != e.active_set.end());
  CHECK(certify(edge, e));
}

TEST_CASE("degenerate flat optimum") {
  // second row is all zeros with y2 = 1/2, so every x has residual >= 1/4;
  // the optimum sits on the least-squares affine set
  RealInstance inst = real_inst({{1, 1, 0}, {0, 0, 0}}, {1, 0}, Rational(1, 2));
  inst.y[1] = Rational(1, 2);
  Solution s = solve(inst);
  CHECK(s.degenerate);
  CHECK(s.objective_value.as_rational() == Rational(1));
  CHECK(s.point[0].is_zero());
  CHECK(s.point[1].as_rational() == Rational(1));
  CHECK(s.point[2].is_zero());
  CHECK(s.ball_multiplier.is_zero());
  CHECK(s.equality_multipliers.size() == 1);
  CHECK(certify(inst, s));
}

TEST_CASE("infeasible instance is rejected") {
  RealInstance inst = real_inst({{0, 0}}, {1}, Rational(1, 2));
  CHECK_THROWS_AS(solve(inst), InfeasibleError);
  CHECK_THROWS_AS(solve(inst, ExecutionPolicy::Serial), InfeasibleError);
}

TEST_CASE("split cap guards the enumeration") {
  RealInstance inst;
  inst.A = RatMatrix(1, 13);
  for (std::size_t j = 0; j < 13; ++j) inst.A.at(0, j) = Rational(1);
  inst.y = {Rational(1)};
  inst.epsilon = Rational(1, 2);
  CHECK_THROWS_AS(solve(inst), BudgetExceededError);
}

TEST_CASE("invalid shapes are rejected") {
  CHECK_THROWS_AS(solve(real_inst({{1, 2}, {3, 4}}, {1, 1}, Rational(1, 2))), ValidationError);
  CHECK_THROWS_AS(solve(real_inst({{1, 2}}, {1}, Rational(0))), ValidationError);
  CHECK_THROWS_AS(solve(real_inst({{1, 2}}, {1, 1}, Rational(1, 2))), ValidationError);
}

TEST_CASE("certify rejects tampered certificates") {
  RealInstance inst = real_inst({{1, 2}}, {1}, Rational(1, 2));
  Solution s = solve(inst);
  REQUIRE(certify(inst, s));

  Solution t = s;
  t.objective_value += QuadraticNumber(Rational(1, 100));
  CHECK(!certify(inst, t));

  t = s;
  t.point[1] += QuadraticNumber(Rational(1, 100));  // leaves the ball boundary
  CHECK(!certify(inst, t));

  t = s;
  t.ball_multiplier = -t.ball_multiplier;
  CHECK(!certify(inst, t));

  t = s;
  t.nonneg_multipliers[2] = QuadraticNumber(Rational(-1));
  CHECK(!certify(inst, t));

  t = s;
  t.active_set.push_back(2);  // claims w2 = 0 but w2 = 1/4
  CHECK(!certify(inst, t));

  t = s;
  t.active_set.erase(t.active_set.begin());  // hides the active ball
  CHECK(!certify(inst, t));

  t = s;
  t.degenerate = true;  // wrong path flag
  CHECK(!certify(inst, t));

  t = s;
  t.complex_lift = true;  // wrong overload flag
  CHECK(!certify(inst, t));

  t = s;
  t.point.pop_back();  // malformed sizes never throw
  CHECK(!certify(inst, t));

  // a feasible non-optimal point with fake multipliers fails stationarity
  t = s;
  t.point = {QuadraticNumber(1), QuadraticNumber(0)};
  t.objective_value = QuadraticNumber(1);
  t.active_set = {0, 2, 3, 4};
  CHECK(!certify(inst, t));

  // degenerate certificates face the same scrutiny
  RealInstance deg = real_inst({{1, 1, 0}, {0, 0, 0}}, {1, 0}, Rational(1, 2));
  deg.y[1] = Rational(1, 2);
  Solution d = solve(deg);
  REQUIRE(certify(deg, d));
  Solution dt = d;
  dt.equality_multipliers[0] += QuadraticNumber(1);
  CHECK(!certify(deg, dt));
  dt = d;
  dt.equality_multipliers.clear();
  CHECK(!certify(deg, dt));
  dt = d;
  dt.degenerate = false;
  CHECK(!certify(deg, dt));
}

TEST_CASE("complex solve with real data reduces to the real answer") {
  std::mt19937 gen(59);
  for (int i = 0; i < 10; ++i) {
    RealInstance inst = random_feasible(gen);
    ComplexInstance c;
    c.A_re = inst.A;
    c.A_im = RatMatrix(inst.A.rows(), inst.A.cols());
    c.y_re = inst.y;
    c.y_im = RatVec(inst.y.size(), Rational(0));
    c.epsilon = inst.epsilon;
    Solution real_sol = solve(inst);
    Solution cmpl = solve_complex(c);
    CHECK(cmpl.complex_lift);
    CHECK(certify(c, cmpl));
    REQUIRE(cmpl.point.size() == 2 * inst.cols());
    for (std::size_t j = 0; j < inst.cols(); ++j) CHECK(cmpl.point[2 * j + 1].is_zero());
    CHECK(cmpl.objective_value == real_sol.objective_value);
  }
}

TEST_CASE("complex solve with genuinely complex data") {
  ComplexInstance c;
  c.A_re = RatMatrix(1, 2);
  c.A_im = RatMatrix(1, 2);
  c.A_im.at(0, 0) = Rational(1);
  c.y_re = {Rational(1)};
  c.y_im = {Rational(0)};
  c.epsilon = Rational(1, 2);
  Solution s = solve_complex(c);
  CHECK(s.objective_value.as_rational() == Rational(1, 2));
  REQUIRE(s.point.size() == 4);
  CHECK(s.point[0].is_zero());
  CHECK(s.point[1].as_rational() == Rational(-1, 2));  // x1 = -i/2
  CHECK(s.point[2].is_zero());
  CHECK(s.point[3].is_zero());
  CHECK(certify(c, s));
  // certifying against the wrong overload flag fails
  Solution t = s;
  t.complex_lift = false;
  CHECK(!certify(c, t));
}

TEST_CASE("feasibility check") {
  FeasibilityReport empty = check_feasible(real_inst({{0, 0}}, {1}, Rational(1, 2)));
  CHECK(empty.status == FeasibilityStatus::Empty);
  CHECK(empty.min_residual_sq == Rational(1));

  FeasibilityReport ok = check_feasible(real_inst({{1, 2}}, {1}, Rational(1, 2)));
  CHECK(ok.status == FeasibilityStatus::Feasible);
  CHECK(ok.min_residual_sq.is_zero());

  // rank-deficient rows: distance^2 of (1,0) from span{(1,2)} is 4/5, so
  // eps = 1 clears it and eps = 1/2 does not
  FeasibilityReport rd = check_feasible(real_inst({{1, 1, 0}, {2, 2, 0}}, {1, 0}, Rational(1)));
  CHECK(rd.status == FeasibilityStatus::Feasible);
  CHECK(rd.min_residual_sq == Rational(4, 5));

  FeasibilityReport never = check_feasible(real_inst({{1, 1, 0}, {2, 2, 0}}, {1, 0}, Rational(1, 2)));
  CHECK(never.status == FeasibilityStatus::Empty);
  CHECK(never.min_residual_sq == Rational(4, 5));

  // the reduced-problem overload reconstructs the same numbers
  RealInstance inst = real_inst({{1, 1, 0}, {2, 2, 0}}, {1, 0}, Rational(1));
  FeasibilityReport via = check_feasible(split_abs(inst), inst.epsilon);
  CHECK(via.status == rd.status);
  CHECK(via.min_residual_sq == rd.min_residual_sq);

  ComplexInstance c;
  c.A_re = RatMatrix(1, 2);
  c.A_im = RatMatrix(1, 2);
  c.y_re = {Rational(2)};
  c.y_im = {Rational(0)};
  c.epsilon = Rational(1);
  FeasibilityReport ce = check_feasible(c);
  CHECK(ce.status == FeasibilityStatus::Empty);
  CHECK(ce.min_residual_sq == Rational(4));
}

TEST_CASE("random feasibility against the reduced overload") {
  std::mt19937 gen(61);
  for (int i = 0; i < 40; ++i) {
    std::size_t m = 1 + gen() % 2, n = m + 1 + gen() % 2;
    RealInstance inst;
    inst.A = testutil::rand_matrix(gen, m, n, -3, 3, 3);
    inst.y = testutil::rand_vector(gen, m, -3, 3, 3);
    inst.epsilon = Rational(1 + gen() % 3, 2);
    FeasibilityReport direct = check_feasible(inst);
    FeasibilityReport via = check_feasible(split_abs(inst), inst.epsilon);
    CHECK(direct.status == via.status);
    CHECK(direct.min_residual_sq == via.min_residual_sq);
    CHECK(direct.min_residual_sq == least_squares(inst.A, inst.y).residual_sq);
  }
}

TEST_CASE("random instances all certify") {
  std::mt19937 gen(67);
  for (int i = 0; i < 60; ++i) {
    RealInstance inst = random_feasible(gen);
    Solution s = solve(inst);
    CHECK(certify(inst, s));
    // point is feasible and the objective matches its l1 norm
    QuadraticNumber l1(Rational(0));
    for (const auto& v : s.point) l1 += v.abs();
    CHECK(l1 == s.objective_value);
  }
}
