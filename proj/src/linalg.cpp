#include "bssbp/linalg.hpp"

namespace bssbp {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVec>& rows) {
  if (rows.empty()) return RatMatrix();
  RatMatrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw ValidationError("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

RatVec RatMatrix::row(std::size_t r) const {
  RatVec v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

RatVec RatMatrix::col(std::size_t c) const {
  RatVec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw ValidationError("matrix product shape mismatch");
  RatMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) p.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return p;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

RatVec mat_vec(const RatMatrix& a, const RatVec& x) {
  if (a.cols() != x.size()) throw ValidationError("matrix-vector shape mismatch");
  RatVec y(a.rows(), Rational(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a.at(i, j).is_zero()) y[i] += a.at(i, j) * x[j];
  return y;
}

Rational dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw ValidationError("dot product shape mismatch");
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational norm_sq(const RatVec& a) { return dot(a, a); }

Rational l1_norm(const RatVec& a) {
  Rational s(0);
  for (const auto& x : a) s += x.abs();
  return s;
}

namespace {

// Row echelon form of [m | b] in place; returns pivot columns.
struct Echelon {
  RatMatrix work;  // rows x (cols + rhs)
  std::vector<std::size_t> pivot_cols;
  std::size_t cols;  // columns of m proper
};

Echelon eliminate(const RatMatrix& m, const RatVec* b) {
  std::size_t extra = b ? 1 : 0;
  Echelon e;
  e.cols = m.cols();
  e.work = RatMatrix(m.rows(), m.cols() + extra);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) e.work.at(r, c) = m.at(r, c);
    if (b) {
      if (b->size() != m.rows()) throw ValidationError("rhs size mismatch");
      e.work.at(r, m.cols()) = (*b)[r];
    }
  }
  std::size_t row = 0;
  for (std::size_t col = 0; col < e.cols && row < e.work.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < e.work.rows() && e.work.at(pivot, col).is_zero()) ++pivot;
    if (pivot == e.work.rows()) continue;
    if (pivot != row)
      for (std::size_t c = col; c < e.work.cols(); ++c)
        std::swap(e.work.at(pivot, c), e.work.at(row, c));
    Rational inv = e.work.at(row, col).reciprocal();
    for (std::size_t c = col; c < e.work.cols(); ++c) e.work.at(row, c) *= inv;
    for (std::size_t r = 0; r < e.work.rows(); ++r) {
      if (r == row || e.work.at(r, col).is_zero()) continue;
      Rational f = e.work.at(r, col);
      for (std::size_t c = col; c < e.work.cols(); ++c)
        e.work.at(r, c) -= f * e.work.at(row, c);
    }
    e.pivot_cols.push_back(col);
    ++row;
  }
  return e;
}

}  // namespace

LinearSolveResult solve_general(const RatMatrix& m, const RatVec& b) {
  Echelon e = eliminate(m, &b);
  LinearSolveResult res;
  res.rank = e.pivot_cols.size();
  // Consistent iff no pivot in the rhs column.
  for (std::size_t r = res.rank; r < e.work.rows(); ++r)
    if (!e.work.at(r, e.cols).is_zero()) return res;
  res.consistent = true;
  res.particular.assign(e.cols, Rational(0));
  for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
    res.particular[e.pivot_cols[i]] = e.work.at(i, e.cols);
  std::vector<bool> is_pivot(e.cols, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  for (std::size_t free_col = 0; free_col < e.cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    RatVec k(e.cols, Rational(0));
    k[free_col] = Rational(1);
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
      k[e.pivot_cols[i]] = -e.work.at(i, free_col);
    res.kernel.push_back(std::move(k));
  }
  return res;
}

std::optional<RatVec> solve_unique(const RatMatrix& m, const RatVec& b) {
  LinearSolveResult res = solve_general(m, b);
  if (!res.consistent || !res.kernel.empty()) return std::nullopt;
  return res.particular;
}

std::size_t rank(const RatMatrix& m) { return eliminate(m, nullptr).pivot_cols.size(); }

std::vector<std::size_t> independent_rows(const RatMatrix& m) {
  // Pivot columns of the transpose are independent rows of m.
  return [&] {
    Echelon e = eliminate(m.transposed(), nullptr);
    return e.pivot_cols;
  }();
}

LeastSquares least_squares(const RatMatrix& a, const RatVec& y) {
  RatMatrix at = a.transposed();
  RatMatrix gram = at * a;
  RatVec aty = mat_vec(at, y);
  LinearSolveResult res = solve_general(gram, aty);
  if (!res.consistent)
    throw ValidationError("normal equations inconsistent");  // cannot happen for real data
  RatVec r = mat_vec(a, res.particular);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= y[i];
  return LeastSquares{std::move(res.particular), norm_sq(r)};
}

}  // namespace bssbp
