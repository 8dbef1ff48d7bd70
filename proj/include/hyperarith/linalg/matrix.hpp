#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hyperarith/core/error.hpp"
#include "hyperarith/linalg/scalar.hpp"

namespace hyperarith {

template <class T>
using Vector = std::vector<T>;

/// Dense row-major matrix over an exact field. Carries a zero element so
/// that empty matrices still know which field they live in.
template <class T>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const T& zero)
      : rows_(rows), cols_(cols), data_(rows * cols, ScalarOps<T>::zero_like(zero)),
        zero_(ScalarOps<T>::zero_like(zero)) {}

  static Matrix identity(std::size_t n, const T& prototype) {
    Matrix m(n, n, prototype);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = ScalarOps<T>::one_like(prototype);
    return m;
  }

  static Matrix from_rows(const std::vector<Vector<T>>& rows, const T& prototype) {
    const std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), c, prototype);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw DimensionMismatch("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix diagonal(const Vector<T>& entries, const T& prototype) {
    Matrix m(entries.size(), entries.size(), prototype);
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const T& zero() const { return zero_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  Vector<T> row_vector(std::size_t i) const { return Vector<T>(row(i).begin(), row(i).end()); }
  Vector<T> column(std::size_t j) const {
    Vector<T> v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
  }
  std::vector<Vector<T>> row_vectors() const {
    std::vector<Vector<T>> out;
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row_vector(i));
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix submatrix(const std::vector<std::size_t>& row_idx,
                   const std::vector<std::size_t>& col_idx) const {
    Matrix s(row_idx.size(), col_idx.size(), zero_);
    for (std::size_t i = 0; i < row_idx.size(); ++i)
      for (std::size_t j = 0; j < col_idx.size(); ++j) s(i, j) = (*this)(row_idx[i], col_idx[j]);
    return s;
  }

  Matrix principal_submatrix(const std::vector<std::size_t>& idx) const {
    return submatrix(idx, idx);
  }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

  bool is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (i != j && !is_zero_scalar((*this)(i, j))) return false;
    return true;
  }

  Matrix operator*(const Matrix& b) const {
    if (cols_ != b.rows_) throw DimensionMismatch("matrix product dimensions");
    Matrix c(rows_, b.cols_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (is_zero_scalar(a)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a * b(k, j);
      }
    return c;
  }

  Vector<T> operator*(const Vector<T>& v) const {
    if (cols_ != v.size()) throw DimensionMismatch("matrix-vector dimensions");
    Vector<T> out(rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  Matrix operator+(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw DimensionMismatch("matrix sum dimensions");
    Matrix c = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) c.data_[k] += b.data_[k];
    return c;
  }

  Matrix operator-(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw DimensionMismatch("matrix difference dimensions");
    Matrix c = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) c.data_[k] -= b.data_[k];
    return c;
  }

  Matrix scaled(const T& s) const {
    Matrix c = *this;
    for (auto& x : c.data_) x = x * s;
    return c;
  }

  bool operator==(const Matrix& b) const {
    return rows_ == b.rows_ && cols_ == b.cols_ && data_ == b.data_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> data_;
  T zero_;
};

template <class T>
T dot(const Vector<T>& a, const Vector<T>& b, const T& zero) {
  if (a.size() != b.size()) throw DimensionMismatch("dot product dimensions");
  T acc = zero;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

/// u^T G v.
template <class T>
T bilinear(const Matrix<T>& g, const Vector<T>& u, const Vector<T>& v) {
  if (u.size() != g.rows() || v.size() != g.cols())
    throw DimensionMismatch("vector length does not match form dimension");
  return dot(u, g * v, g.zero());
}

}  // namespace hyperarith
