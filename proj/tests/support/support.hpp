#pragma once

#include <random>
#include <vector>

#include "hyperarith/algebra/number_field.hpp"
#include "hyperarith/linalg/elimination.hpp"

namespace testsupport {

using namespace hyperarith;

inline std::mt19937_64& rng() {
  static thread_local std::mt19937_64 g(20241015);
  return g;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Rational random_rational(long num = 9, long den = 4) {
  Rational q(uniform(-num, num), uniform(1, den));
  q.canonicalize();
  return q;
}

inline Rational random_nonzero_rational(long num = 9, long den = 4) {
  while (true) {
    auto q = random_rational(num, den);
    if (q != 0) return q;
  }
}

inline FieldPtr sqrt_field(long d, std::size_t embedding = 1) {
  return NumberField::create(RationalPolynomial::from_descending({1, 0, -d}), embedding);
}

inline FieldElement random_element(const FieldPtr& k, long num = 5, long den = 3) {
  std::vector<Rational> c;
  for (std::size_t i = 0; i < k->degree(); ++i) c.push_back(random_rational(num, den));
  return FieldElement(k, c);
}

inline FieldElement elem(const FieldPtr& k, std::vector<Rational> c) { return FieldElement(k, std::move(c)); }

template <class T, class Gen>
Matrix<T> random_matrix(std::size_t r, std::size_t c, const T& zero, Gen&& gen) {
  Matrix<T> m(r, c, zero);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = gen();
  return m;
}

template <class T, class Gen>
Matrix<T> random_symmetric(std::size_t n, const T& zero, Gen&& gen) {
  Matrix<T> m(n, n, zero);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = gen();
  return m;
}

template <class T, class Gen>
Matrix<T> random_invertible(std::size_t n, const T& zero, Gen&& gen) {
  while (true) {
    auto m = random_matrix(n, n, zero, gen);
    if (!is_zero_scalar(determinant(m))) return m;
  }
}

}  // namespace testsupport
