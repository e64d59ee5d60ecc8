// Times the active-set enumeration in serial and parallel mode on the same
// instances and checks the two answers agree exactly, field for field.

#include <chrono>
#include <cstdio>
#include <random>

#include "bssbp/optimizer.hpp"

using namespace bssbp;
using Clock = std::chrono::steady_clock;

namespace {

Rational rand_rational(std::mt19937& gen, long lo, long hi, long maxden) {
  std::uniform_int_distribution<long> dend(1, maxden);
  long q = dend(gen);
  std::uniform_int_distribution<long> numd(lo * q, hi * q);
  return Rational(numd(gen), q);
}

RealInstance random_feasible(std::mt19937& gen, std::size_t m, std::size_t n) {
  for (;;) {
    RealInstance inst;
    inst.A = RatMatrix(m, n);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < n; ++c) inst.A.at(r, c) = rand_rational(gen, -3, 3, 3);
    inst.y.assign(m, Rational(0));
    for (auto& e : inst.y) e = rand_rational(gen, -3, 3, 3);
    inst.epsilon = Rational(1, 2);
    if (least_squares(inst.A, inst.y).residual_sq <= inst.epsilon * inst.epsilon) return inst;
  }
}

bool same_repr(const QuadraticNumber& a, const QuadraticNumber& b) {
  return a.rational_part() == b.rational_part() &&
         a.radical_coefficient() == b.radical_coefficient() && a.radicand() == b.radicand();
}

bool identical(const Solution& a, const Solution& b) {
  if (a.point.size() != b.point.size() || a.active_set != b.active_set ||
      a.degenerate != b.degenerate)
    return false;
  if (!same_repr(a.objective_value, b.objective_value)) return false;
  for (std::size_t i = 0; i < a.point.size(); ++i)
    if (!same_repr(a.point[i], b.point[i])) return false;
  return true;
}

double run_timed(const RealInstance& inst, ExecutionPolicy policy, Solution& out) {
  auto start = Clock::now();
  out = solve(inst, policy);
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

int main() {
  std::mt19937 gen(1234);
  std::printf("%4s %4s %12s %12s %9s\n", "N", "m", "serial (s)", "parallel (s)", "speedup");
  for (std::size_t n = 5; n <= 8; ++n) {
    std::size_t m = 2;
    RealInstance inst = random_feasible(gen, m, n);
    Solution serial, parallel;
    double ts = run_timed(inst, ExecutionPolicy::Serial, serial);
    double tp = run_timed(inst, ExecutionPolicy::Parallel, parallel);
    if (!identical(serial, parallel)) {
      std::printf("MISMATCH between serial and parallel results at N = %zu\n", n);
      return 1;
    }
    std::printf("%4zu %4zu %12.3f %12.3f %8.2fx\n", n, m, ts, tp, ts / tp);
  }
  std::printf("serial and parallel solutions identical on every instance\n");
  return 0;
}
