#pragma once

#include <optional>
#include <vector>

#include "hyperarith/algebra/number_field.hpp"
#include "hyperarith/linalg/matrix.hpp"
#include "hyperarith/linalg/subspace.hpp"
#include "hyperarith/linalg/symmetric.hpp"

namespace hyperarith {

/// A K-quadratic space (K^(n+1), q) given by its Gram matrix. Degenerate
/// spaces are representable so that restrictions can be reported; the
/// invariant computations below require nondegeneracy and say so.
class QuadraticSpace {
 public:
  explicit QuadraticSpace(Matrix<FieldElement> gram);

  /// Over Q.
  static QuadraticSpace rational(const Matrix<Rational>& gram);
  static QuadraticSpace diagonal(const std::vector<FieldElement>& entries);
  static QuadraticSpace diagonal(const std::vector<Rational>& entries);

  const FieldPtr& field() const { return field_; }
  const Matrix<FieldElement>& gram() const { return gram_; }
  std::size_t rank() const { return gram_.rows(); }
  /// Dimension of the hyperbolic space the form would define.
  std::size_t n() const { return gram_.rows() - 1; }

  bool is_nondegenerate() const;
  FieldElement determinant() const;

  /// The Gram matrix with rational entries, when K = Q.
  std::optional<Matrix<Rational>> rational_gram() const;

  FieldElement inner_product(const Vector<FieldElement>& u, const Vector<FieldElement>& v) const;
  FieldElement q(const Vector<FieldElement>& x) const { return inner_product(x, x); }

  QuadraticSpace scaled(const FieldElement& lambda) const;

  bool operator==(const QuadraticSpace& other) const {
    return *field_ == *other.field_ && gram_ == other.gram_;
  }

 private:
  FieldPtr field_;
  Matrix<FieldElement> gram_;
};

struct AdmissibilityReport {
  bool admissible = false;
  std::vector<Signature> signature_at_each_embedding;
  std::optional<std::size_t> failing_embedding;
};

/// Signature (n,1) at the chosen embedding and definite at every other real
/// embedding.
AdmissibilityReport is_admissible(const QuadraticSpace& space);

/// q(x) = -1 exactly and x_{n+1} > 0 at the chosen embedding.
bool hyperboloid_membership(const QuadraticSpace& space, const Vector<FieldElement>& x);

struct Restriction {
  QuadraticSpace space;
  bool degenerate = false;
};

/// Pullback of q to the echelon basis of w.
Restriction restrict(const QuadraticSpace& space, const Subspace<FieldElement>& w);

/// Vector helpers for building inputs over a field.
Vector<FieldElement> lift(const FieldPtr& field, const std::vector<Rational>& v);

}  // namespace hyperarith
