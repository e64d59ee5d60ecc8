#pragma once

#include "bssbp/instance.hpp"
#include "bssbp/optimizer.hpp"

namespace bssbp {

// Two instance sequences converging to the same limit while their exact
// solutions stay a fixed distance apart: the solution map has no continuous,
// hence no Turing-model computable, selection near the limit, yet every
// member is solved exactly.
struct GapSequences {
  Rational epsilon;
  std::vector<RealInstance> omega1;  // A = (1, 1 - 2^-n)
  std::vector<RealInstance> omega2;  // A = (1 - 2^-n, 1)
  RealInstance omega_star;           // A = (1, 1)
  Rational kappa;

  // Exact convergence check: entry-wise l2 distance to the limit is at most
  // 2^-n for every member; kappa positive. Throws ValidationError.
  void validate() const;
};

struct GapRecord {
  std::size_t n = 0;
  Rational input_distance;
  Solution solution1;
  Solution solution2;
  Rational separation_sq;
};

struct GapReport {
  std::vector<GapRecord> records;
  Rational kappa;
  bool conditions_a_b_hold = false;
};

// Builds the 1x2 family up to n_max. Throws EpsilonOutOfRangeError unless
// 0 < epsilon < 1 (the closed-form solutions need a nonempty ball strictly
// inside the unit scale).
GapSequences build_sequences(const Rational& epsilon, std::size_t n_max);

// Solves every pair exactly and reports per-n input distance and solution
// separation; conditions_a_b_hold is the conjunction of distance <= 2^-n and
// separation^2 > kappa^2 over all n.
GapReport verify_gap(const GapSequences& seq);

}  // namespace bssbp
