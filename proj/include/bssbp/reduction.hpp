#pragma once

#include "bssbp/instance.hpp"
#include "bssbp/polynomial.hpp"

namespace bssbp {

// Ball polynomial q with {x : ||Ax - y||_2 <= eps} = {x : q(x) <= 0},
// expanded exactly over N variables; degree 2 (or constant when A = 0).
MultivariatePolynomial build_ball_polynomial(const RealInstance& inst);

// Complex counterpart over 2N real variables in interleaved order
// (Re_1, Im_1, Re_2, Im_2, ...). Equal to the real ball polynomial of
// realify(inst).
MultivariatePolynomial build_ball_polynomial(const ComplexInstance& inst);

// Real embedding of a complex instance: 2m x 2N matrix acting on the
// interleaved coordinates, with ||A~ x~ - y~||_2 equal to the complex
// residual norm. Rows come in (real part, imaginary part) pairs.
RealInstance realify(const ComplexInstance& inst);

// Sum of absolute values of all 2N real coordinates of a complex vector,
// i.e. sum_i |Re(x_i)| + |Im(x_i)|.
Rational star_norm(const RatVec& interleaved);

// Affine map from split (nonnegative-part) variables back to the original
// coordinates. RealSplit: 2N -> N, x_j = w_j - z_j with ordering
// (w_1..w_N, z_1..z_N). ComplexSplit: 4N -> 2N interleaved, ordering
// (Re+_1..Re+_N, Re-_1..Re-_N, Im+_1..Im+_N, Im-_1..Im-_N).
struct RecoverMap {
  enum class Kind { RealSplit, ComplexSplit };
  Kind kind = Kind::RealSplit;
  std::size_t n = 0;

  std::size_t split_count() const { return kind == Kind::RealSplit ? 2 * n : 4 * n; }
  std::size_t recovered_count() const { return kind == Kind::RealSplit ? n : 2 * n; }

  template <class Scalar>
  std::vector<Scalar> apply(const std::vector<Scalar>& split) const {
    if (split.size() != split_count()) throw ValidationError("split point has wrong dimension");
    std::vector<Scalar> out;
    out.reserve(recovered_count());
    if (kind == Kind::RealSplit) {
      for (std::size_t j = 0; j < n; ++j) out.push_back(split[j] - split[n + j]);
    } else {
      for (std::size_t j = 0; j < n; ++j) {
        out.push_back(split[j] - split[n + j]);
        out.push_back(split[2 * n + j] - split[3 * n + j]);
      }
    }
    return out;
  }
};

// Linear-objective polynomial program over split variables: minimize the
// all-ones objective over one ball atom plus nonnegativity atoms.
struct ReducedProblem {
  MultivariatePolynomial objective{0};
  SemialgebraicDescription feasible_set;
  RecoverMap recover;
};

// Positive/negative part split of the real problem: 2N variables
// (w_1..w_N, z_1..z_N), objective sum(w) + sum(z), feasible set
// {q(w - z) <= 0, w >= 0, z >= 0}.
ReducedProblem split_abs(const RealInstance& inst);

// Complex lift: 4N variables grouped as Re+, Re-, Im+, Im-; objective is
// the star-norm split sum; ball atom is the interleaved complex ball
// composed with the split map.
ReducedProblem lift_complex(const ComplexInstance& inst);

}  // namespace bssbp
