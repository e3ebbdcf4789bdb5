#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "syminv/error.hpp"
#include "syminv/rational.hpp"

namespace syminv {

// Dense row-major matrix over a field T (Rat in exact mode, double in the
// float mode used by the Jacobian-rank check). Values are immutable in
// practice: every operation returns a fresh matrix.
template <typename T>
class Mat {
 public:
  Mat() = default;

  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, T(0)) {
    if (rows < 0 || cols < 0) throw DimensionMismatchError("negative matrix dimension");
  }

  // Row-major initializer: Mat<Rat>({{1,2},{3,4}}).
  Mat(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = int(rows.size());
    cols_ = rows_ ? int(rows.begin()->size()) : 0;
    a_.reserve(size_t(rows_) * cols_);
    for (const auto& r : rows) {
      if (int(r.size()) != cols_) throw DimensionMismatchError("ragged initializer");
      for (const auto& x : r) a_.push_back(x);
    }
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  Mat transposed() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  T trace() const {
    require_square("trace");
    T s(0);
    for (int i = 0; i < rows_; ++i) s += (*this)(i, i);
    return s;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!(x == T(0))) return false;
    return true;
  }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = i + 1; j < cols_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

  bool is_antisymmetric() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = i; j < cols_; ++j)
        if (!((*this)(i, j) == -(*this)(j, i))) return false;
    return true;
  }

  friend Mat operator+(const Mat& a, const Mat& b) {
    a.require_same_shape(b, "+");
    Mat c(a.rows_, a.cols_);
    for (size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] + b.a_[i];
    return c;
  }

  friend Mat operator-(const Mat& a, const Mat& b) {
    a.require_same_shape(b, "-");
    Mat c(a.rows_, a.cols_);
    for (size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] - b.a_[i];
    return c;
  }

  Mat operator-() const {
    Mat c(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) c.a_[i] = -a_[i];
    return c;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatchError("matrix product shape mismatch");
    Mat c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int l = 0; l < a.cols_; ++l) {
        const T& ail = a(i, l);
        if (ail == T(0)) continue;
        for (int j = 0; j < b.cols_; ++j) c(i, j) += ail * b(l, j);
      }
    return c;
  }

  friend Mat operator*(const T& s, const Mat& a) {
    Mat c(a.rows_, a.cols_);
    for (size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = s * a.a_[i];
    return c;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  void require_square(const char* op) const {
    if (!is_square()) throw DimensionMismatchError(std::string(op) + ": matrix not square");
  }

 private:
  void require_same_shape(const Mat& b, const char* op) const {
    if (rows_ != b.rows_ || cols_ != b.cols_)
      throw DimensionMismatchError(std::string(op) + ": shape mismatch");
  }

  int rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

using MatQ = Mat<Rat>;
using MatD = Mat<double>;

namespace detail {
inline double pivot_mag(double x) { return std::fabs(x); }
inline Rat pivot_mag(const Rat& x) { return abs(x); }
}  // namespace detail

// Gauss-Jordan inverse with partial pivoting (largest magnitude pivot; for
// Rat this only keeps intermediate numbers small, the result is exact).
template <typename T>
Mat<T> inverse(const Mat<T>& m) {
  m.require_square("inverse");
  const int n = m.rows();
  Mat<T> a = m;
  Mat<T> inv = Mat<T>::identity(n);
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int r = col; r < n; ++r) {
      if (a(r, col) == T(0)) continue;
      if (p < 0 || detail::pivot_mag(a(r, col)) > detail::pivot_mag(a(p, col))) p = r;
    }
    if (p < 0) throw SingularError("matrix is singular");
    if (p != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a(p, j), a(col, j));
        std::swap(inv(p, j), inv(col, j));
      }
    const T d = a(col, col);
    for (int j = 0; j < n; ++j) {
      a(col, j) = a(col, j) / d;
      inv(col, j) = inv(col, j) / d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a(r, col) == T(0)) continue;
      const T f = a(r, col);
      for (int j = 0; j < n; ++j) {
        a(r, j) = a(r, j) - f * a(col, j);
        inv(r, j) = inv(r, j) - f * inv(col, j);
      }
    }
  }
  return inv;
}

template <typename T>
T determinant(Mat<T> a) {
  a.require_square("determinant");
  const int n = a.rows();
  T det(1);
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int r = col; r < n; ++r) {
      if (a(r, col) == T(0)) continue;
      if (p < 0 || detail::pivot_mag(a(r, col)) > detail::pivot_mag(a(p, col))) p = r;
    }
    if (p < 0) return T(0);
    if (p != col) {
      for (int j = col; j < n; ++j) std::swap(a(p, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    for (int r = col + 1; r < n; ++r) {
      if (a(r, col) == T(0)) continue;
      const T f = a(r, col) / a(col, col);
      for (int j = col; j < n; ++j) a(r, j) = a(r, j) - f * a(col, j);
    }
  }
  return det;
}

// Row-echelon rank. Meaningful for exact T.
template <typename T>
int rank_of(Mat<T> a) {
  const int rows = a.rows(), cols = a.cols();
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int p = -1;
    for (int r = rank; r < rows; ++r)
      if (!(a(r, col) == T(0))) { p = r; break; }
    if (p < 0) continue;
    if (p != rank)
      for (int j = col; j < cols; ++j) std::swap(a(p, j), a(rank, j));
    for (int r = rank + 1; r < rows; ++r) {
      if (a(r, col) == T(0)) continue;
      const T f = a(r, col) / a(rank, col);
      for (int j = col; j < cols; ++j) a(r, j) = a(r, j) - f * a(rank, j);
    }
    ++rank;
  }
  return rank;
}

template <typename T>
int kernel_dimension(const Mat<T>& a) {
  return a.cols() - rank_of(a);
}

}  // namespace syminv
