#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace liepca {

using Vec = std::vector<double>;

inline double dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

inline double dist(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dist: size mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

inline bool all_finite(const Vec& a) {
  for (double x : a) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

/// Dense row-major matrix of doubles. Small sizes only (everything here is
/// at most d^2 x d^2 for ambient dimension d <= ~10).
class Mat {
 public:
  Mat() = default;

  Mat(int rows, int cols)
      : rows_(rows), cols_(cols), a_(checked_size(rows, cols), 0.0) {}

  Mat(std::initializer_list<std::initializer_list<double>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ > 0 ? static_cast<int>(rows.begin()->size()) : 0;
    a_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != cols_)
        throw std::invalid_argument("Mat: ragged initializer");
      a_.insert(a_.end(), row.begin(), row.end());
    }
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  bool empty() const { return a_.empty(); }

  double& operator()(int i, int j) { return a_[idx(i, j)]; }
  double operator()(int i, int j) const { return a_[idx(i, j)]; }

  Vec row(int i) const {
    Vec r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }

  Vec col(int j) const {
    Vec c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  double trace() const {
    if (!square()) throw std::invalid_argument("trace: non-square matrix");
    double s = 0.0;
    for (int i = 0; i < rows_; ++i) s += (*this)(i, i);
    return s;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (double x : a_) s += x * x;
    return std::sqrt(s);
  }

  /// Max absolute column sum.
  double one_norm() const {
    double best = 0.0;
    for (int j = 0; j < cols_; ++j) {
      double s = 0.0;
      for (int i = 0; i < rows_; ++i) s += std::abs((*this)(i, j));
      best = std::max(best, s);
    }
    return best;
  }

  double max_abs() const {
    double best = 0.0;
    for (double x : a_) best = std::max(best, std::abs(x));
    return best;
  }

  bool is_finite() const {
    for (double x : a_) {
      if (!std::isfinite(x)) return false;
    }
    return true;
  }

  Mat& operator+=(const Mat& o) {
    check_same_shape(o, "+=");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
  }

  Mat& operator-=(const Mat& o) {
    check_same_shape(o, "-=");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
  }

  Mat& operator*=(double c) {
    for (double& x : a_) x *= c;
    return *this;
  }

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(Mat a, double c) { return a *= c; }
  friend Mat operator*(double c, Mat a) { return a *= c; }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Mat*: shape mismatch");
    Mat c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const double aik = a(i, k);
        if (aik == 0.0) continue;
        for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Vec operator*(const Mat& a, const Vec& x) {
    if (a.cols_ != static_cast<int>(x.size()))
      throw std::invalid_argument("Mat*Vec: shape mismatch");
    Vec y(a.rows_, 0.0);
    for (int i = 0; i < a.rows_; ++i) {
      double s = 0.0;
      for (int j = 0; j < a.cols_; ++j) s += a(i, j) * x[j];
      y[i] = s;
    }
    return y;
  }

 private:
  static std::size_t checked_size(int rows, int cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Mat: negative dims");
    return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
  }

  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * cols_ + j;
  }

  void check_same_shape(const Mat& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument(std::string("Mat") + op + ": shape mismatch");
  }

  int rows_ = 0;
  int cols_ = 0;
  Vec a_;
};

inline Mat outer(const Vec& u, const Vec& v) {
  Mat m(static_cast<int>(u.size()), static_cast<int>(v.size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = u[i] * v[j];
  return m;
}

inline Mat symmetric_part(const Mat& a) {
  Mat s = a;
  s += a.transpose();
  s *= 0.5;
  return s;
}

/// Kronecker product; (kron(B, C) * vec(A)) equals vec(C * A * B^T) under
/// column-major vec.
inline Mat kron(const Mat& b, const Mat& c) {
  Mat k(b.rows() * c.rows(), b.cols() * c.cols());
  for (int ib = 0; ib < b.rows(); ++ib)
    for (int jb = 0; jb < b.cols(); ++jb) {
      const double bij = b(ib, jb);
      if (bij == 0.0) continue;
      for (int ic = 0; ic < c.rows(); ++ic)
        for (int jc = 0; jc < c.cols(); ++jc)
          k(ib * c.rows() + ic, jb * c.cols() + jc) = bij * c(ic, jc);
    }
  return k;
}

/// Column-major flattening: vec(A)[i + j*rows] = A(i, j).
inline Vec vec_column_major(const Mat& a) {
  Vec v(static_cast<std::size_t>(a.rows()) * a.cols());
  for (int j = 0; j < a.cols(); ++j)
    for (int i = 0; i < a.rows(); ++i) v[j * a.rows() + i] = a(i, j);
  return v;
}

inline Mat unvec_column_major(const Vec& v, int rows, int cols) {
  if (static_cast<int>(v.size()) != rows * cols)
    throw std::invalid_argument("unvec: size mismatch");
  Mat a(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) a(i, j) = v[j * rows + i];
  return a;
}

/// Gauss-Jordan with partial pivoting; throws on (near-)singular input.
inline Mat inverse(const Mat& a) {
  if (!a.square()) throw std::invalid_argument("inverse: non-square matrix");
  const int n = a.rows();
  Mat m = a;
  Mat inv = Mat::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int i = col + 1; i < n; ++i)
      if (std::abs(m(i, col)) > std::abs(m(pivot, col))) pivot = i;
    if (std::abs(m(pivot, col)) < 1e-300)
      throw std::runtime_error("inverse: singular matrix");
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(m(pivot, j), m(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const double p = m(col, col);
    for (int j = 0; j < n; ++j) {
      m(col, j) /= p;
      inv(col, j) /= p;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col) continue;
      const double f = m(i, col);
      if (f == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        m(i, j) -= f * m(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

/// Determinant via LU with partial pivoting.
inline double determinant(const Mat& a) {
  if (!a.square()) throw std::invalid_argument("determinant: non-square matrix");
  const int n = a.rows();
  Mat m = a;
  double det = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int i = col + 1; i < n; ++i)
      if (std::abs(m(i, col)) > std::abs(m(pivot, col))) pivot = i;
    if (m(pivot, col) == 0.0) return 0.0;
    if (pivot != col) {
      det = -det;
      for (int j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
    }
    det *= m(col, col);
    for (int i = col + 1; i < n; ++i) {
      const double f = m(i, col) / m(col, col);
      for (int j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

}  // namespace liepca
