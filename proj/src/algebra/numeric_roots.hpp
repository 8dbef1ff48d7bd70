#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <vector>

#include "hyperarith/algebra/polynomial.hpp"

namespace hyperarith::detail {

using Real = boost::multiprecision::cpp_bin_float_100;
using Complex = boost::multiprecision::cpp_complex_100;

Real to_real(const Rational& q);

/// High-precision approximations of all complex roots of a defining
/// polynomial. These only guide reconstruction and reporting; every
/// decision made with them is confirmed by exact arithmetic.
struct NumericRoots {
  std::vector<Real> real_roots;         // ascending, aligned with the Sturm intervals
  std::vector<Complex> complex_upper;   // one representative (Im > 0) per conjugate pair
  /// Evaluation points: real roots, then each pair as (z, conj z).
  std::vector<Complex> points;
  /// Inverse Vandermonde: power-basis coefficients from values at `points`.
  std::vector<std::vector<Complex>> inverse_vandermonde;
};

/// All roots of a squarefree polynomial (Weierstrass-Durand-Kerner + Newton).
std::vector<Complex> complex_roots(const RationalPolynomial& p);

Complex evaluate(const RationalPolynomial& p, const Complex& z);
Real evaluate(const RationalPolynomial& p, const Real& x);

}  // namespace hyperarith::detail
