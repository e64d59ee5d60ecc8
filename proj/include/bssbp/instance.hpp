#pragma once

#include "bssbp/linalg.hpp"

namespace bssbp {

// Underdetermined recovery instance: minimize the l1 norm of x subject to
// ||A x - y||_2 <= epsilon. Invariants: m >= 1, N >= 2, m < N, epsilon > 0.
struct RealInstance {
  RatMatrix A{1, 1};
  RatVec y;
  Rational epsilon;

  std::size_t rows() const { return A.rows(); }
  std::size_t cols() const { return A.cols(); }
  void validate() const;
};

// Complex-valued instance, stored as separate real and imaginary parts.
// Same shape invariants as the real case.
struct ComplexInstance {
  RatMatrix A_re{1, 1};
  RatMatrix A_im{1, 1};
  RatVec y_re;
  RatVec y_im;
  Rational epsilon;

  std::size_t rows() const { return A_re.rows(); }
  std::size_t cols() const { return A_re.cols(); }
  void validate() const;
};

inline void validate_instance_shape(std::size_t m, std::size_t n, std::size_t ylen, const Rational& eps) {
  if (m < 1) throw ValidationError("instance needs at least one measurement row");
  if (n < 2) throw ValidationError("instance needs at least two unknowns");
  if (m >= n) throw ValidationError("instance must be underdetermined (rows < cols)");
  if (ylen != m) throw ValidationError("measurement vector length must match row count");
  if (eps.sign() <= 0) throw ValidationError("noise bound must be positive");
}

inline void RealInstance::validate() const {
  validate_instance_shape(A.rows(), A.cols(), y.size(), epsilon);
}

inline void ComplexInstance::validate() const {
  if (A_im.rows() != A_re.rows() || A_im.cols() != A_re.cols())
    throw ValidationError("real and imaginary matrix parts must have equal shape");
  if (y_im.size() != y_re.size())
    throw ValidationError("real and imaginary measurement parts must have equal length");
  validate_instance_shape(A_re.rows(), A_re.cols(), y_re.size(), epsilon);
}

}  // namespace bssbp
