#pragma once

#include <cstddef>
#include <vector>

#include "hyperarith/linalg/elimination.hpp"
#include "hyperarith/linalg/matrix.hpp"

namespace hyperarith {

/// Linear subspace of T^n, stored as the reduced row echelon form of a
/// spanning set. The echelon basis is unique, so equality of subspaces is
/// equality of representatives.
template <class T>
class Subspace {
 public:
  Subspace(std::size_t ambient_dim, const T& prototype)
      : ambient_dim_(ambient_dim), basis_(0, ambient_dim, prototype) {}

  static Subspace span(const std::vector<Vector<T>>& vectors, std::size_t ambient_dim,
                       const T& prototype) {
    Matrix<T> m(vectors.size(), ambient_dim, prototype);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      if (vectors[i].size() != ambient_dim) throw DimensionMismatch("vector outside ambient space");
      for (std::size_t j = 0; j < ambient_dim; ++j) m(i, j) = vectors[i][j];
    }
    return from_rows(m);
  }

  static Subspace from_rows(const Matrix<T>& rows) {
    Subspace s(rows.cols(), rows.zero());
    auto ech = row_reduce(rows);
    s.basis_ = std::move(ech.reduced);
    s.pivots_ = std::move(ech.pivots);
    return s;
  }

  static Subspace whole(std::size_t n, const T& prototype) {
    return from_rows(Matrix<T>::identity(n, prototype));
  }

  /// Coordinate subspace spanned by e_i for i in indices.
  static Subspace coordinate(const std::vector<std::size_t>& indices, std::size_t n,
                             const T& prototype) {
    Matrix<T> m(indices.size(), n, prototype);
    for (std::size_t r = 0; r < indices.size(); ++r) m(r, indices[r]) = ScalarOps<T>::one_like(prototype);
    return from_rows(m);
  }

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix<T>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<Vector<T>> basis_vectors() const { return basis_.row_vectors(); }

  bool contains(const Vector<T>& v) const {
    auto r = reduce(v);
    for (const auto& x : r)
      if (!is_zero_scalar(x)) return false;
    return true;
  }

  /// v minus its echelon combination: zero in every pivot column. This is a
  /// canonical representative of v modulo the subspace.
  Vector<T> reduce(const Vector<T>& v) const {
    if (v.size() != ambient_dim_) throw DimensionMismatch("vector outside ambient space");
    Vector<T> r = v;
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      const T f = r[pivots_[i]];
      if (is_zero_scalar(f)) continue;
      for (std::size_t j = 0; j < ambient_dim_; ++j) r[j] -= f * basis_(i, j);
    }
    return r;
  }

  bool operator==(const Subspace& other) const {
    return ambient_dim_ == other.ambient_dim_ && basis_ == other.basis_;
  }

 private:
  std::size_t ambient_dim_;
  Matrix<T> basis_;
  std::vector<std::size_t> pivots_;
};

template <class T>
Subspace<T> sum(const Subspace<T>& a, const Subspace<T>& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspaces in different spaces");
  auto vs = a.basis_vectors();
  for (auto& v : b.basis_vectors()) vs.push_back(std::move(v));
  return Subspace<T>::span(vs, a.ambient_dim(), a.basis().zero());
}

template <class T>
Subspace<T> intersect(const Subspace<T>& a, const Subspace<T>& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspaces in different spaces");
  const std::size_t n = a.ambient_dim(), ra = a.dim(), rb = b.dim();
  // Columns: basis of a, then negated basis of b. Kernel vectors (x, y) give
  // x^T A = y^T B.
  Matrix<T> m(n, ra + rb, a.basis().zero());
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < ra; ++i) m(j, i) = a.basis()(i, j);
    for (std::size_t i = 0; i < rb; ++i) m(j, ra + i) = -b.basis()(i, j);
  }
  const Matrix<T> ker = kernel(m);
  std::vector<Vector<T>> vs;
  for (std::size_t k = 0; k < ker.rows(); ++k) {
    Vector<T> v(n, a.basis().zero());
    for (std::size_t i = 0; i < ra; ++i)
      for (std::size_t j = 0; j < n; ++j) v[j] += ker(k, i) * a.basis()(i, j);
    vs.push_back(std::move(v));
  }
  return Subspace<T>::span(vs, n, a.basis().zero());
}

/// {v : <v, w>_G = 0 for all w in a}.
template <class T>
Subspace<T> complement_q(const Matrix<T>& g, const Subspace<T>& a) {
  if (g.rows() != a.ambient_dim()) throw DimensionMismatch("form and subspace dimensions");
  return Subspace<T>::from_rows(kernel(a.basis() * g));
}

/// Gram matrix of G restricted to the echelon basis of a.
template <class T>
Matrix<T> restricted_gram(const Matrix<T>& g, const Subspace<T>& a) {
  return a.basis() * g * a.basis().transpose();
}

/// G-orthogonal projection onto a: the unique P(v) in a with v - P(v) orthogonal
/// to a. Requires G nondegenerate on a.
template <class T>
Vector<T> project_q(const Matrix<T>& g, const Subspace<T>& a, const Vector<T>& v) {
  if (v.size() != a.ambient_dim()) throw DimensionMismatch("vector outside ambient space");
  const Matrix<T> gram = restricted_gram(g, a);
  auto inv = inverse(gram);
  if (!inv) throw DegenerateRestriction();
  const Vector<T> rhs = a.basis() * (g * v);
  const Vector<T> coeffs = *inv * rhs;
  Vector<T> out(a.ambient_dim(), g.zero());
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += coeffs[i] * a.basis()(i, j);
  return out;
}

}  // namespace hyperarith
