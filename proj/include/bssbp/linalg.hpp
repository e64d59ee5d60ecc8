#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bssbp/rational.hpp"

namespace bssbp {

// Dense matrix over Rational, row-major.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}
  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<RatVec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  RatMatrix transposed() const;
  RatVec row(std::size_t r) const;
  RatVec col(std::size_t c) const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

RatVec mat_vec(const RatMatrix& a, const RatVec& x);
Rational dot(const RatVec& a, const RatVec& b);
Rational norm_sq(const RatVec& a);
Rational l1_norm(const RatVec& a);

// Outcome of exact Gaussian elimination on M x = b.
struct LinearSolveResult {
  bool consistent = false;
  RatVec particular;             // one solution when consistent
  std::vector<RatVec> kernel;    // basis of the nullspace of M
  std::size_t rank = 0;
};

LinearSolveResult solve_general(const RatMatrix& m, const RatVec& b);

// Unique solution of a square nonsingular system, or unset.
std::optional<RatVec> solve_unique(const RatMatrix& m, const RatVec& b);

std::size_t rank(const RatMatrix& m);

// Indices of a maximal linearly independent set of rows, in increasing order.
std::vector<std::size_t> independent_rows(const RatMatrix& m);

// Least-squares data for min_x ||a x - y||_2^2, computed exactly from the
// normal equations (consistent for every a, including rank-deficient ones).
struct LeastSquares {
  RatVec point;          // one minimizer
  Rational residual_sq;  // minimal squared residual
};

LeastSquares least_squares(const RatMatrix& a, const RatVec& y);

}  // namespace bssbp
