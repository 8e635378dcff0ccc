// Dense matrices and exact determinants (fraction-free Bareiss and
// evaluation/interpolation).
#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "tl/poly.hpp"

namespace tl {

template <class T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols, T init = T())
      : rows_(rows), cols_(cols), a_(rows * cols, init) {}

  static Matrix identity(std::size_t n, T one) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  Matrix operator+(const Matrix& o) const {
    Matrix r(*this);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
  }
  Matrix operator-(const Matrix& o) const {
    Matrix r(*this);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
  }
  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& v = (*this)(i, k);
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += v * o(k, j);
      }
    return r;
  }
  Matrix scaled(const T& s) const {
    Matrix r(*this);
    for (auto& v : r.a_) v = v * s;
    return r;
  }
  Matrix transposed() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<T> a_;
};

// Arithmetic hooks for the fraction-free elimination.
template <class R>
struct ExactRing;

template <>
struct ExactRing<IntPoly> {
  static bool is_zero(const IntPoly& a) { return a.is_zero(); }
  static IntPoly one() { return IntPoly(1); }
  static IntPoly divexact(const IntPoly& a, const IntPoly& b) { return IntPoly::divexact(a, b); }
};

template <>
struct ExactRing<BigInt> {
  static bool is_zero(const BigInt& a) { return a == 0; }
  static BigInt one() { return BigInt(1); }
  static BigInt divexact(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
};

// Exact determinant by fraction-free (Bareiss) elimination; every interior
// division is exact. Throws on non-square input.
template <class R>
R bareiss_det(Matrix<R> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("bareiss_det: non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return ExactRing<R>::one();
  R prev = ExactRing<R>::one();
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (ExactRing<R>::is_zero(m(k, k))) {
      std::size_t piv = k + 1;
      while (piv < n && ExactRing<R>::is_zero(m(piv, k))) ++piv;
      if (piv == n) return R();
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = ExactRing<R>::divexact(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
      m(i, k) = R();
    }
    prev = m(k, k);
  }
  R det = m(n - 1, n - 1);
  if (negate) det = R() - det;
  return det;
}

// Exact determinant of a Z[x] matrix by evaluation at the integer points
// 0, 1, -1, 2, -2, ... and interpolation. degree_bound must bound the degree
// of the determinant; a violation is detected on one extra evaluation point
// and reported as std::domain_error.
IntPoly det_by_evaluation(const Matrix<IntPoly>& m, std::size_t degree_bound);

}  // namespace tl
