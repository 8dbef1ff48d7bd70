#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hyperarith/algebra/rational.hpp"

namespace hyperarith {

/// Closed rational interval [lo, hi].
struct RationalInterval {
  Rational lo;
  Rational hi;

  bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
};

/// Dense univariate polynomial over Q, coefficients stored low degree first.
/// The zero polynomial has no coefficients and degree -1.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coefficients);

  static RationalPolynomial constant(const Rational& c);
  static RationalPolynomial monomial(const Rational& c, std::size_t degree);
  /// From integer coefficients listed highest degree first.
  static RationalPolynomial from_descending(const std::vector<Integer>& coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t i) const;
  const Rational& leading() const { return coeffs_.back(); }
  bool is_monic() const { return !is_zero() && leading() == 1; }
  bool has_integer_coefficients() const;

  Rational operator()(const Rational& x) const;
  /// Enclosure of {p(x) : x in iv} by interval Horner evaluation.
  RationalInterval evaluate(const RationalInterval& iv) const;

  RationalPolynomial derivative() const;
  RationalPolynomial monic() const;

  friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const Rational& c, const RationalPolynomial& a);
  RationalPolynomial operator-() const;
  bool operator==(const RationalPolynomial& other) const = default;

  /// Euclidean division; divisor must be nonzero.
  std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& divisor) const;
  RationalPolynomial operator%(const RationalPolynomial& divisor) const { return divmod(divisor).second; }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd (zero if both inputs are zero).
RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b);

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
struct ExtendedGcd {
  RationalPolynomial g, s, t;
};
ExtendedGcd extended_gcd(const RationalPolynomial& a, const RationalPolynomial& b);

bool is_squarefree(const RationalPolynomial& p);

/// Sturm chain p, p', -rem(...), ... of a squarefree polynomial.
std::vector<RationalPolynomial> sturm_chain(const RationalPolynomial& p);

/// Number of distinct real roots in the half-open interval (lo, hi].
std::size_t count_roots(const std::vector<RationalPolynomial>& chain, const Rational& lo,
                        const Rational& hi);

/// Cauchy bound: every root has absolute value < bound.
Rational root_bound(const RationalPolynomial& p);

/// Disjoint isolating intervals (lo, hi] for the real roots of a squarefree
/// polynomial, in ascending order, each refined to width <= max_width.
std::vector<RationalInterval> isolate_real_roots(const RationalPolynomial& p,
                                                 const Rational& max_width);

/// Halve an isolating interval of a simple root of p, keeping the root inside.
RationalInterval bisect_root(const RationalPolynomial& p, const RationalInterval& iv);

}  // namespace hyperarith
