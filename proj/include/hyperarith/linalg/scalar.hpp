#pragma once

#include "hyperarith/algebra/rational.hpp"

namespace hyperarith {

/// Field-element protocol used by the generic linear algebra. Elements of a
/// number field only know their field through a prototype value, so every
/// constant is produced "like" an existing element.
template <class T>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
  static Rational zero_like(const Rational&) { return 0; }
  static Rational one_like(const Rational&) { return 1; }
  static Rational from_integer(const Rational&, long n) { return n; }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
};

template <class T>
bool is_zero_scalar(const T& x) {
  return ScalarOps<T>::is_zero(x);
}

}  // namespace hyperarith
