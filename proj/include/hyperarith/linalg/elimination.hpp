#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hyperarith/linalg/matrix.hpp"

namespace hyperarith {

template <class T>
struct EchelonForm {
  Matrix<T> reduced;                // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Gauss-Jordan elimination to the unique reduced row echelon form.
template <class T>
EchelonForm<T> row_reduce(const Matrix<T>& a) {
  Matrix<T> m = a;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero_scalar(m(p, c))) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    const T inv = ScalarOps<T>::one_like(m.zero()) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero_scalar(m(i, c))) continue;
      const T f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<std::size_t> keep(r);
  std::vector<std::size_t> all_cols(m.cols());
  for (std::size_t i = 0; i < r; ++i) keep[i] = i;
  for (std::size_t j = 0; j < m.cols(); ++j) all_cols[j] = j;
  return {m.submatrix(keep, all_cols), std::move(pivots)};
}

template <class T>
std::size_t rank(const Matrix<T>& a) {
  return row_reduce(a).pivots.size();
}

/// Basis (as rows) of the right null space {x : A x = 0}.
template <class T>
Matrix<T> kernel(const Matrix<T>& a) {
  const auto ech = row_reduce(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<Vector<T>> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector<T> v(n, a.zero());
    v[f] = ScalarOps<T>::one_like(a.zero());
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) v[ech.pivots[i]] = -ech.reduced(i, f);
    basis.push_back(std::move(v));
  }
  Matrix<T> out(basis.size(), n, a.zero());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = basis[i][j];
  return out;
}

/// Some solution of A x = b, or nullopt if inconsistent.
template <class T>
std::optional<Vector<T>> solve(const Matrix<T>& a, const Vector<T>& b) {
  if (b.size() != a.rows()) throw DimensionMismatch("right-hand side length");
  Matrix<T> aug(a.rows(), a.cols() + 1, a.zero());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto ech = row_reduce(aug);
  Vector<T> x(a.cols(), a.zero());
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
    if (ech.pivots[i] == a.cols()) return std::nullopt;
    x[ech.pivots[i]] = ech.reduced(i, a.cols());
  }
  return x;
}

template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& a) {
  if (!a.is_square()) throw DimensionMismatch("inverse of non-square matrix");
  const std::size_t n = a.rows();
  Matrix<T> aug(n, 2 * n, a.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = ScalarOps<T>::one_like(a.zero());
  }
  const auto ech = row_reduce(aug);
  if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<T> inv(n, n, a.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = ech.reduced(i, n + j);
  return inv;
}

/// Fraction-free (Bareiss) determinant. Every division is exact.
template <class T>
T determinant(const Matrix<T>& a) {
  if (!a.is_square()) throw DimensionMismatch("determinant of non-square matrix");
  const std::size_t n = a.rows();
  const T one = ScalarOps<T>::one_like(a.zero());
  if (n == 0) return one;
  Matrix<T> m = a;
  T prev = one;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero_scalar(m(k, k))) {
      std::size_t p = k + 1;
      while (p < n && is_zero_scalar(m(p, k))) ++p;
      if (p == n) return a.zero();
      m.swap_rows(p, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  T det = m(n - 1, n - 1);
  if (negate) det = -det;
  return det;
}

/// Characteristic polynomial det(xI - A), coefficients low degree first,
/// monic of degree n (Faddeev-LeVerrier).
template <class T>
Vector<T> charpoly(const Matrix<T>& a) {
  if (!a.is_square()) throw DimensionMismatch("characteristic polynomial of non-square matrix");
  const std::size_t n = a.rows();
  Vector<T> c(n + 1, a.zero());
  c[n] = ScalarOps<T>::one_like(a.zero());
  Matrix<T> m(n, n, a.zero());
  const Matrix<T> id = Matrix<T>::identity(n, a.zero());
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + id.scaled(c[n - k + 1]);
    const Matrix<T> am = a * m;
    T trace = a.zero();
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    c[n - k] = -trace / ScalarOps<T>::from_integer(a.zero(), static_cast<long>(k));
  }
  return c;
}

}  // namespace hyperarith
