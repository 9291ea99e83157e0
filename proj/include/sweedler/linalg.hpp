#pragma once
// Dense matrices over an arbitrary exact ring, plus Gaussian elimination
// (inverse, solve, rank, nullspace) over a field of Scalars.

#include <cstddef>
#include <vector>

#include "sweedler/scalar.hpp"

namespace sweedler {

template <class R>
class RMat {
 public:
  RMat() = default;
  RMat(size_t rows, size_t cols, const R& fill)
      : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  R& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const R& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  friend RMat operator+(const RMat& a, const RMat& b) {
    RMat r = a;
    for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = r.a_[i] + b.a_[i];
    return r;
  }
  friend RMat operator-(const RMat& a, const RMat& b) {
    RMat r = a;
    for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = r.a_[i] - b.a_[i];
    return r;
  }
  friend RMat operator*(const RMat& a, const RMat& b) {
    RMat r(a.rows_, b.cols_, a.a_.empty() ? b.a_.front() : a.a_.front());
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t j = 0; j < b.cols_; ++j) {
        R acc = a.at(i, 0) * b.at(0, j);
        for (size_t k = 1; k < a.cols_; ++k)
          acc = acc + a.at(i, k) * b.at(k, j);
        r.at(i, j) = acc;
      }
    return r;
  }
  friend bool operator==(const RMat& a, const RMat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (size_t i = 0; i < a.a_.size(); ++i)
      if (!(a.a_[i] == b.a_[i])) return false;
    return true;
  }
  friend bool operator!=(const RMat& a, const RMat& b) { return !(a == b); }

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<R> a_;
};

using Mat = RMat<Scalar>;
using Vec = std::vector<Scalar>;

Mat mat_zero(const FieldPtr& f, size_t rows, size_t cols);
Mat mat_identity(const FieldPtr& f, size_t n);
Mat mat_scale(const Mat& m, const Scalar& s);
bool mat_is_zero(const Mat& m);

// Gauss-Jordan inverse; singular input raises ComputeError naming the
// first pivot column with no usable pivot.
Mat mat_inv(const Mat& a);
// Solves A X = B for square invertible A.
Mat mat_solve(const Mat& a, const Mat& b);
// Basis of the right nullspace of an arbitrary rectangular matrix.
std::vector<Vec> mat_nullspace(const FieldPtr& f, const Mat& a);
size_t mat_rank(Mat a);

Vec mat_apply(const Mat& a, const Vec& v);
Mat mat_from_columns(const FieldPtr& f, const std::vector<Vec>& cols);

}  // namespace sweedler
