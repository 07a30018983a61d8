#ifndef LIESOL_EXACT_MATRIX_HPP
#define LIESOL_EXACT_MATRIX_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "liesol/errors.hpp"
#include "liesol/exact/scalar.hpp"

namespace liesol {

// Dense matrix over an exact field. All arithmetic is exact; there is no
// floating point anywhere in this module.
template <class K>
class Matrix {
public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }

  static Matrix diagonal(const std::vector<K>& d) {
    Matrix m(int(d.size()), int(d.size()));
    for (int i = 0; i < int(d.size()); ++i) m(i, i) = d[i];
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  K& operator()(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
  const K& operator()(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

  Matrix operator+(const Matrix& o) const {
    Matrix r(rows_, cols_);
    for (std::size_t t = 0; t < a_.size(); ++t) r.a_[t] = a_[t] + o.a_[t];
    return r;
  }
  Matrix operator-(const Matrix& o) const {
    Matrix r(rows_, cols_);
    for (std::size_t t = 0; t < a_.size(); ++t) r.a_[t] = a_[t] - o.a_[t];
    return r;
  }
  Matrix operator-() const {
    Matrix r(rows_, cols_);
    for (std::size_t t = 0; t < a_.size(); ++t) r.a_[t] = -a_[t];
    return r;
  }
  Matrix operator*(const Matrix& o) const {
    Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const K& x = (*this)(i, k);
        if (is_zero(x)) continue;
        for (int j = 0; j < o.cols_; ++j) {
          if (is_zero(o(k, j))) continue;
          r(i, j) += x * o(k, j);
        }
      }
    return r;
  }
  Matrix scaled(const K& c) const {
    Matrix r(rows_, cols_);
    for (std::size_t t = 0; t < a_.size(); ++t) r.a_[t] = c * a_[t];
    return r;
  }

  Matrix transposed() const {
    Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  K trace() const {
    K t = K(0);
    for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  bool is_zero_matrix() const {
    for (const K& x : a_)
      if (!is_zero(x)) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::vector<K> apply(const std::vector<K>& v) const {
    std::vector<K> r(rows_, K(0));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (!is_zero((*this)(i, j))) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  std::vector<K> row_vector(int i) const {
    std::vector<K> r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }
  std::vector<K> col_vector(int j) const {
    std::vector<K> r(rows_);
    for (int i = 0; i < rows_; ++i) r[i] = (*this)(i, j);
    return r;
  }

  Matrix power(int e) const {
    Matrix r = identity(rows_);
    Matrix b = *this;
    while (e > 0) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  const std::vector<K>& flat() const { return a_; }
  std::vector<K>& flat() { return a_; }

  template <class F>
  auto map(F&& f) const {
    using K2 = decltype(f(std::declval<const K&>()));
    Matrix<K2> r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(i, j) = f((*this)(i, j));
    return r;
  }

private:
  int rows_ = 0, cols_ = 0;
  std::vector<K> a_;
};

// Gauss-Jordan inverse; empty result if singular.
template <class K>
bool try_inverse(const Matrix<K>& m, Matrix<K>* out) {
  if (m.rows() != m.cols()) throw InvalidError("inverse of non-square matrix");
  int n = m.rows();
  Matrix<K> a = m;
  Matrix<K> inv = Matrix<K>::identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!is_zero(a(r, col))) {
        piv = r;
        break;
      }
    if (piv < 0) return false;
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    K d = a(col, col);
    for (int j = 0; j < n; ++j) {
      a(col, j) = a(col, j) / d;
      inv(col, j) = inv(col, j) / d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || is_zero(a(r, col))) continue;
      K f = a(r, col);
      for (int j = 0; j < n; ++j) {
        a(r, j) = a(r, j) - f * a(col, j);
        inv(r, j) = inv(r, j) - f * inv(col, j);
      }
    }
  }
  *out = std::move(inv);
  return true;
}

template <class K>
Matrix<K> inverse(const Matrix<K>& m) {
  Matrix<K> out;
  if (!try_inverse(m, &out)) throw InvalidError("matrix is singular");
  return out;
}

template <class K>
K determinant(Matrix<K> a) {
  if (a.rows() != a.cols()) throw InvalidError("determinant of non-square matrix");
  int n = a.rows();
  K det = K(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!is_zero(a(r, col))) {
        piv = r;
        break;
      }
    if (piv < 0) return K(0);
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
      det = -det;
    }
    det = det * a(col, col);
    K d = a(col, col);
    for (int r = col + 1; r < n; ++r) {
      if (is_zero(a(r, col))) continue;
      K f = a(r, col) / d;
      for (int j = col; j < n; ++j) a(r, j) = a(r, j) - f * a(col, j);
    }
  }
  return det;
}

}  // namespace liesol

#endif
