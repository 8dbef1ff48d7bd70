#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "hyperarith/algebra/number_field.hpp"
#include "hyperarith/linalg/matrix.hpp"

namespace hyperarith {

template <class T>
struct CongruenceDiagonalization {
  Matrix<T> diagonal;   // D
  Matrix<T> transform;  // T with T^T G T = D
};

struct DiagonalizeOptions {
  /// When set, pivots are searched in a pseudo-random order. Any order gives
  /// a valid congruence; tests use this to check order independence.
  std::optional<std::uint64_t> shuffle_seed;
};

/// Congruence diagonalization by symmetric Gaussian elimination. When every
/// remaining diagonal entry vanishes but an off-diagonal g_ij does not, the
/// basis vector v_i is replaced by v_i + v_j (new diagonal entry 2 g_ij).
template <class T>
CongruenceDiagonalization<T> symmetric_diagonalize(const Matrix<T>& g,
                                                   const DiagonalizeOptions& options = {}) {
  if (!g.is_symmetric()) throw NotSymmetric();
  const std::size_t n = g.rows();
  Matrix<T> a = g;
  Matrix<T> t = Matrix<T>::identity(n, g.zero());
  std::mt19937_64 rng(options.shuffle_seed.value_or(0));

  // Simultaneous row/column operation: v_dst += f * v_src.
  auto add_multiple = [&](std::size_t dst, std::size_t src, const T& f) {
    for (std::size_t j = 0; j < n; ++j) a(dst, j) += f * a(src, j);
    for (std::size_t i = 0; i < n; ++i) a(i, dst) += f * a(i, src);
    for (std::size_t i = 0; i < n; ++i) t(i, dst) += f * t(i, src);
  };
  auto swap_basis = [&](std::size_t x, std::size_t y) {
    a.swap_rows(x, y);
    a.swap_cols(x, y);
    t.swap_cols(x, y);
  };

  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::size_t> order;
    for (std::size_t i = k; i < n; ++i) order.push_back(i);
    if (options.shuffle_seed) std::shuffle(order.begin(), order.end(), rng);

    std::optional<std::size_t> pivot;
    for (auto i : order)
      if (!is_zero_scalar(a(i, i))) {
        pivot = i;
        break;
      }
    if (!pivot) {
      std::optional<std::pair<std::size_t, std::size_t>> pair;
      for (auto i : order) {
        for (auto j : order)
          if (i != j && !is_zero_scalar(a(i, j))) {
            pair = {i, j};
            break;
          }
        if (pair) break;
      }
      if (!pair) break;  // remaining block is zero
      add_multiple(pair->first, pair->second, ScalarOps<T>::one_like(g.zero()));
      pivot = pair->first;
    }
    swap_basis(k, *pivot);
    const T inv = ScalarOps<T>::one_like(g.zero()) / a(k, k);
    for (std::size_t j = k + 1; j < n; ++j) {
      if (is_zero_scalar(a(k, j))) continue;
      add_multiple(j, k, -(a(k, j) * inv));
    }
  }
  return {std::move(a), std::move(t)};
}

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  std::size_t dimension() const { return positive + negative + zero; }
  bool operator==(const Signature&) const = default;
};

/// (p, m, z) of the real symmetric matrix sigma_j(G).
Signature signature_at(const Matrix<FieldElement>& g, std::size_t embedding,
                       const DiagonalizeOptions& options = {});

/// Signature at the chosen embedding of the entries' field.
Signature signature(const Matrix<FieldElement>& g, const DiagonalizeOptions& options = {});
Signature signature(const Matrix<Rational>& g, const DiagonalizeOptions& options = {});

/// Product of the diagonal entries of a congruence diagonalization:
/// determinant up to the square of det(T).
template <class T>
T diagonal_product(const CongruenceDiagonalization<T>& cd) {
  T acc = ScalarOps<T>::one_like(cd.diagonal.zero());
  for (std::size_t i = 0; i < cd.diagonal.rows(); ++i) acc = acc * cd.diagonal(i, i);
  return acc;
}

}  // namespace hyperarith
