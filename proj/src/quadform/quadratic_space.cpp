#include "hyperarith/quadform/quadratic_space.hpp"

#include "hyperarith/linalg/elimination.hpp"

namespace hyperarith {

QuadraticSpace::QuadraticSpace(Matrix<FieldElement> gram)
    : field_(gram.zero().field()), gram_(std::move(gram)) {
  if (!gram_.is_square() || gram_.rows() == 0) throw DimensionMismatch("Gram matrix must be square and nonempty");
  if (!gram_.is_symmetric()) throw NotSymmetric();
  for (std::size_t i = 0; i < gram_.rows(); ++i)
    for (std::size_t j = 0; j < gram_.cols(); ++j)
      if (!(*gram_(i, j).field() == *field_)) throw FieldMismatch();
}

QuadraticSpace QuadraticSpace::rational(const Matrix<Rational>& g) {
  const auto q = NumberField::rationals();
  Matrix<FieldElement> m(g.rows(), g.cols(), FieldElement(q, Rational(0)));
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) m(i, j) = FieldElement(q, g(i, j));
  return QuadraticSpace(std::move(m));
}

QuadraticSpace QuadraticSpace::diagonal(const std::vector<FieldElement>& entries) {
  if (entries.empty()) throw DimensionMismatch("empty diagonal");
  return QuadraticSpace(Matrix<FieldElement>::diagonal(entries, entries.front().zero_like()));
}

QuadraticSpace QuadraticSpace::diagonal(const std::vector<Rational>& entries) {
  return rational(Matrix<Rational>::diagonal(entries, Rational(0)));
}

bool QuadraticSpace::is_nondegenerate() const { return !determinant().is_zero(); }

FieldElement QuadraticSpace::determinant() const { return hyperarith::determinant(gram_); }

std::optional<Matrix<Rational>> QuadraticSpace::rational_gram() const {
  if (!field_->is_rationals()) return std::nullopt;
  Matrix<Rational> m(rank(), rank(), Rational(0));
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) m(i, j) = *gram_(i, j).as_rational();
  return m;
}

FieldElement QuadraticSpace::inner_product(const Vector<FieldElement>& u,
                                           const Vector<FieldElement>& v) const {
  if (u.size() != rank() || v.size() != rank()) throw DimensionMismatch("vector length differs from form rank");
  return bilinear(gram_, u, v);
}

QuadraticSpace QuadraticSpace::scaled(const FieldElement& lambda) const {
  return QuadraticSpace(gram_.scaled(lambda));
}

AdmissibilityReport is_admissible(const QuadraticSpace& space) {
  AdmissibilityReport r;
  const auto& field = *space.field();
  const std::size_t dim = space.rank();
  r.admissible = true;
  for (std::size_t j = 0; j < field.real_embedding_count(); ++j) {
    const Signature s = signature_at(space.gram(), j);
    r.signature_at_each_embedding.push_back(s);
    bool ok;
    if (j == field.chosen_embedding())
      ok = s.positive == dim - 1 && s.negative == 1;
    else
      ok = s.zero == 0 && (s.positive == dim || s.negative == dim);
    if (!ok && r.admissible) {
      r.admissible = false;
      r.failing_embedding = j;
    }
  }
  return r;
}

bool hyperboloid_membership(const QuadraticSpace& space, const Vector<FieldElement>& x) {
  if (!is_admissible(space).admissible) throw NotAdmissible();
  const FieldElement value = space.q(x);
  if (!(value == FieldElement(space.field(), Rational(-1)))) return false;
  return x.back().sign() > 0;
}

Restriction restrict(const QuadraticSpace& space, const Subspace<FieldElement>& w) {
  if (w.ambient_dim() != space.rank()) throw DimensionMismatch("subspace outside the quadratic space");
  if (w.dim() == 0) throw DimensionMismatch("restriction to the zero subspace");
  QuadraticSpace sub(restricted_gram(space.gram(), w));
  const bool degenerate = !sub.is_nondegenerate();
  return Restriction{std::move(sub), degenerate};
}

Vector<FieldElement> lift(const FieldPtr& field, const std::vector<Rational>& v) {
  Vector<FieldElement> out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(field, x);
  return out;
}

}  // namespace hyperarith
