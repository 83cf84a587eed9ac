#pragma once

#include "qlp/gaussian.hpp"
#include "qlp/surd.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace qlp {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  T& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  bool is_zero() const {
    for (auto& x : a_)
      if (!qlp::is_zero(x)) return false;
    return true;
  }

  Matrix adjoint() const {
    Matrix r(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) r(j, i) = conj((*this)(i, j));
    return r;
  }
  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }
  Matrix conjugate() const {
    Matrix r = *this;
    for (auto& x : r.a_) x = conj(x);
    return r;
  }
  T trace() const {
    T s{};
    for (size_t i = 0; i < rows_ && i < cols_; ++i) s += (*this)(i, i);
    return s;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  template <class S>
  Matrix& scale(const S& s) {
    for (auto& x : a_) x *= s;
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
    Matrix r(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (qlp::is_zero(x)) continue;
        for (size_t j = 0; j < b.cols_; ++j)
          if (!qlp::is_zero(b(k, j))) r(i, j) += x * b(k, j);
      }
    return r;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  std::vector<T>& data() { return a_; }
  const std::vector<T>& data() const { return a_; }

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix dimension mismatch");
  }
  size_t rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> r(a.rows() * b.rows(), a.cols() * b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) {
      if (is_zero(a(i, j))) continue;
      for (size_t k = 0; k < b.rows(); ++k)
        for (size_t l = 0; l < b.cols(); ++l) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return r;
}

// tr(A* B)
template <class T>
T hs_inner(const Matrix<T>& a, const Matrix<T>& b) {
  T s{};
  for (size_t k = 0; k < a.data().size(); ++k)
    if (!is_zero(a.data()[k]) && !is_zero(b.data()[k])) s += conj(a.data()[k]) * b.data()[k];
  return s;
}

// rank over a field (Rational or Gaussian)
template <class T>
size_t rank(Matrix<T> m) {
  size_t r = 0;
  for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    for (size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    T inv = T(1) / m(r, c);
    for (size_t i = r + 1; i < m.rows(); ++i) {
      if (is_zero(m(i, c))) continue;
      T f = m(i, c) * inv;
      for (size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

// inverse over a field; nullopt when singular
template <class T>
std::optional<Matrix<T>> inverse(Matrix<T> m) {
  size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("inverse of non-square matrix");
  Matrix<T> inv = Matrix<T>::identity(n);
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && is_zero(m(p, c))) ++p;
    if (p == n) return std::nullopt;
    for (size_t j = 0; j < n; ++j) {
      std::swap(m(p, j), m(c, j));
      std::swap(inv(p, j), inv(c, j));
    }
    T s = T(1) / m(c, c);
    for (size_t j = 0; j < n; ++j) {
      m(c, j) *= s;
      inv(c, j) *= s;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == c || is_zero(m(i, c))) continue;
      T f = m(i, c);
      for (size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

}  // namespace qlp
