#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hyperarith/algebra/number_field.hpp"

namespace hyperarith {

/// Q(sqrt(d_1), ..., sqrt(d_t)) for square-class independent d_i, of degree 2^t.
///
/// Elements have two coordinate systems: the power basis of the primitive
/// element theta = sum w_i sqrt(d_i) (used by FieldElement), and the
/// product basis prod_{i in S} sqrt(d_i) indexed by subsets S (used for
/// automorphisms and readable output). When some d_i < 0 there is no real
/// embedding and only the degree/containment bookkeeping is available.
class MultiquadraticField {
 public:
  /// Retains the d_i that are independent modulo squares, in input order.
  /// Each input must be a squarefree integer other than 0 and 1.
  static MultiquadraticField create(const std::vector<Integer>& discriminants);

  const std::vector<Integer>& generators() const { return generators_; }
  std::size_t degree() const { return std::size_t{1} << generators_.size(); }
  bool is_totally_real() const { return totally_real_; }
  const RationalPolynomial& minimal_polynomial() const { return min_poly_; }
  const std::vector<Integer>& primitive_weights() const { return weights_; }

  /// Real field realization; null when some generator is negative. The
  /// chosen embedding sends every sqrt(d_i) to the positive root.
  const FieldPtr& field() const { return field_; }

  /// sqrt(d_i) in the power basis.
  const std::vector<FieldElement>& square_roots() const { return sqrt_gens_; }

  /// True iff sqrt(d) lies in the field, i.e. d is in the square-class span.
  bool contains_sqrt(const Integer& d) const;
  /// sqrt(d) as r * prod_{i in S} sqrt(d_i) with r > 0 rational; positive
  /// under the chosen embedding. nullopt if sqrt(d) is not in the field.
  std::optional<FieldElement> sqrt_of(const Integer& d) const;

  /// Automorphism sqrt(d_i) -> signs[i] * sqrt(d_i).
  FieldElement apply_automorphism(const FieldElement& x, const std::vector<int>& signs) const;
  /// All 2^t sign vectors, mask bit i set meaning sqrt(d_i) -> -sqrt(d_i).
  std::vector<std::vector<int>> automorphism_signs() const;

  /// Coordinates on the product basis, indexed by subset mask.
  std::vector<Rational> product_coordinates(const FieldElement& x) const;
  /// "a + b*sqrt(2) + c*sqrt(6)" style rendering.
  std::string render(const FieldElement& x) const;

 private:
  std::vector<Integer> generators_;
  std::vector<Integer> weights_;
  bool totally_real_ = true;
  RationalPolynomial min_poly_;
  FieldPtr field_;
  std::vector<FieldElement> sqrt_gens_;
  std::optional<Matrix<Rational>> power_to_product_;  // columns: theta^k in product basis
  std::optional<Matrix<Rational>> product_to_power_;
  std::vector<FieldElement> theta_images_;  // indexed by sign mask
};

/// Square-class exponent vectors over GF(2): true iff d lies in the span of gens.
bool in_square_class_span(const std::vector<Integer>& gens, const Integer& d);

/// Squarefree parts of gens, ordered by absolute value (negative first) and
/// greedily reduced to a set independent modulo squares. Order-insensitive.
std::vector<Integer> independent_square_classes(const std::vector<Integer>& gens);

bool same_square_class_span(const std::vector<Integer>& a, const std::vector<Integer>& b);

}  // namespace hyperarith
