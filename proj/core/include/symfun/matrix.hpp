#pragma once

#include <cstddef>
#include <vector>

#include "symfun/errors.hpp"

namespace symfun {

/// Dense row-major matrix over a field K.
template <class K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1L);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  K& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const K& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    Matrix r(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i) {
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const K& xik = x(i, k);
        if (xik.is_zero()) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) {
          if (!y(k, j).is_zero()) r(i, j) += xik * y(k, j);
        }
      }
    }
    return r;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        const K& v = (*this)(i, j);
        if (i == j ? !(v == K(1L)) : !v.is_zero()) return false;
      }
    }
    return true;
  }

  /// Gauss-Jordan inverse; throws SingularTransition.
  Matrix inverse() const {
    const std::size_t n = rows_;
    Matrix a = *this;
    Matrix inv = identity(n);
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t piv = c;
      while (piv < n && a(piv, c).is_zero()) ++piv;
      if (piv == n) throw SingularTransition("matrix is singular");
      if (piv != c) {
        for (std::size_t j = 0; j < n; ++j) {
          std::swap(a(piv, j), a(c, j));
          std::swap(inv(piv, j), inv(c, j));
        }
      }
      const K pinv = K(1L) / a(c, c);
      for (std::size_t j = 0; j < n; ++j) {
        if (!a(c, j).is_zero()) a(c, j) *= pinv;
        if (!inv(c, j).is_zero()) inv(c, j) *= pinv;
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (i == c || a(i, c).is_zero()) continue;
        const K f = a(i, c);
        for (std::size_t j = 0; j < n; ++j) {
          if (!a(c, j).is_zero()) a(i, j) -= f * a(c, j);
          if (!inv(c, j).is_zero()) inv(i, j) -= f * inv(c, j);
        }
      }
    }
    return inv;
  }

  /// Solves A x = b; throws SingularTransition.
  std::vector<K> solve(std::vector<K> b) const {
    const std::size_t n = rows_;
    Matrix a = *this;
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t piv = c;
      while (piv < n && a(piv, c).is_zero()) ++piv;
      if (piv == n) throw SingularTransition("system is singular");
      if (piv != c) {
        for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
        std::swap(b[piv], b[c]);
      }
      for (std::size_t i = c + 1; i < n; ++i) {
        if (a(i, c).is_zero()) continue;
        const K f = a(i, c) / a(c, c);
        for (std::size_t j = c; j < n; ++j) {
          if (!a(c, j).is_zero()) a(i, j) -= f * a(c, j);
        }
        b[i] -= f * b[c];
      }
    }
    std::vector<K> x(n);
    for (std::size_t i = n; i-- > 0;) {
      K s = b[i];
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!a(i, j).is_zero()) s -= a(i, j) * x[j];
      }
      x[i] = s / a(i, i);
    }
    return x;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<K> a_;
};

}  // namespace symfun
