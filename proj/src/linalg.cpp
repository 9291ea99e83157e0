#include "sweedler/linalg.hpp"

namespace sweedler {

Mat mat_zero(const FieldPtr& f, size_t rows, size_t cols) {
  return Mat(rows, cols, Scalar::zero(f));
}

Mat mat_identity(const FieldPtr& f, size_t n) {
  Mat m = mat_zero(f, n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Mat mat_scale(const Mat& m, const Scalar& s) {
  Mat r = m;
  for (size_t i = 0; i < r.rows(); ++i)
    for (size_t j = 0; j < r.cols(); ++j) r.at(i, j) = r.at(i, j) * s;
  return r;
}

bool mat_is_zero(const Mat& m) {
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) return false;
  return true;
}

namespace {

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<size_t> rref(Mat& m) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    size_t p = row;
    while (p < m.rows() && m.at(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
    Scalar inv = m.at(row, col).inverse();
    for (size_t j = 0; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) * inv;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      Scalar factor = m.at(i, col);
      for (size_t j = 0; j < m.cols(); ++j)
        m.at(i, j) = m.at(i, j) - factor * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Mat mat_inv(const Mat& a) {
  if (a.rows() != a.cols()) throw ComputeError("inverse of non-square matrix");
  const size_t n = a.rows();
  if (n == 0) return a;
  const FieldPtr f = a.at(0, 0).field();
  Mat aug = mat_zero(f, n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = Scalar::one(f);
  }
  std::vector<size_t> pivots = rref(aug);
  for (size_t k = 0; k < n; ++k)
    if (k >= pivots.size() || pivots[k] != k)
      throw ComputeError("singular matrix: no pivot in column " +
                         std::to_string(k));
  Mat inv = mat_zero(f, n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

Mat mat_solve(const Mat& a, const Mat& b) { return mat_inv(a) * b; }

std::vector<Vec> mat_nullspace(const FieldPtr& f, const Mat& a) {
  if (a.cols() == 0) return {};
  if (a.rows() == 0) {
    std::vector<Vec> basis;
    for (size_t j = 0; j < a.cols(); ++j) {
      Vec v(a.cols(), Scalar::zero(f));
      v[j] = Scalar::one(f);
      basis.push_back(std::move(v));
    }
    return basis;
  }
  Mat m = a;
  std::vector<size_t> pivots = rref(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(a.cols(), Scalar::zero(f));
    v[free] = Scalar::one(f);
    for (size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -m.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

size_t mat_rank(Mat a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  return rref(a).size();
}

Vec mat_apply(const Mat& a, const Vec& v) {
  Vec out;
  out.reserve(a.rows());
  for (size_t i = 0; i < a.rows(); ++i) {
    Scalar acc = a.at(i, 0) * v[0];
    for (size_t j = 1; j < a.cols(); ++j) acc += a.at(i, j) * v[j];
    out.push_back(acc);
  }
  return out;
}

Mat mat_from_columns(const FieldPtr& f, const std::vector<Vec>& cols) {
  if (cols.empty()) return mat_zero(f, 0, 0);
  Mat m = mat_zero(f, cols[0].size(), cols.size());
  for (size_t j = 0; j < cols.size(); ++j)
    for (size_t i = 0; i < cols[j].size(); ++i) m.at(i, j) = cols[j][i];
  return m;
}

}  // namespace sweedler
