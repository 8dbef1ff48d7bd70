#include "hyperarith/hybrid/glue.hpp"

namespace hyperarith {

GlueMap GlueMap::from_alphas(const FieldElement& alpha1, const FieldElement& alpha2) {
  GlueMap g{alpha2 / alpha1, std::nullopt, nullptr};
  g.extension = QuadraticExtension::create(g.ratio);
  g.ratio_root = g.extension->root();
  return g;
}

GlueMap GlueMap::from_gluing(const BlockComplex& complex, std::size_t gluing) {
  const auto& g = complex.gluings.at(gluing);
  return from_alphas(complex.blocks.at(g.first).alpha(), complex.blocks.at(g.second).alpha());
}

Vector<ExtElement> GlueMap::apply(const Vector<ExtElement>& y) const {
  if (y.empty()) throw DimensionMismatch("empty vector");
  Vector<ExtElement> x = y;
  x[0] = ExtElement::sqrt_delta(extension) * y[0];
  return x;
}

TransportResult transported_subspace_rational(const GlueMap& glue, const Subspace<FieldElement>& u,
                                              const Vector<ExtElement>& xi) {
  if (xi.size() != u.ambient_dim()) throw DimensionMismatch("xi and U live in different spaces");
  for (std::size_t i = 0; i < u.dim(); ++i)
    if (!u.basis()(i, 0).is_zero()) throw DimensionMismatch("U must lie in the hyperplane x0 = 0");
  if (xi[0].is_zero()) throw XiInsideH();

  const ExtElement zero(glue.extension, glue.ratio.zero_like());
  std::vector<Vector<ExtElement>> rows;
  for (const auto& r : u.basis_vectors()) rows.push_back(embed(glue.extension, r));
  const auto u_ext = Subspace<ExtElement>::span(rows, u.ambient_dim(), zero);

  TransportResult result;
  result.reduced = u_ext.reduce(glue.apply(xi));
  const ExtElement lead = result.reduced[0];
  Vector<FieldElement> k_vector;
  for (const auto& x : result.reduced) {
    const ExtElement y = x / lead;
    if (!y.in_base()) return result;
    k_vector.push_back(y.a());
  }
  result.rational = true;
  auto gens = u.basis_vectors();
  gens.push_back(std::move(k_vector));
  result.basis = Subspace<FieldElement>::span(gens, u.ambient_dim(), glue.ratio.zero_like());
  return result;
}

std::optional<Subspace<FieldElement>> field_of_definition(const Subspace<ExtElement>& w) {
  std::vector<Vector<ExtElement>> conj_rows;
  for (const auto& r : w.basis_vectors()) conj_rows.push_back(conjugate(r));
  const auto conj = Subspace<ExtElement>::span(conj_rows, w.ambient_dim(), w.basis().zero());
  if (!(conj == w)) return std::nullopt;
  // The reduced echelon basis of a conjugation-stable space is fixed by
  // conjugation, so its entries lie in K.
  const FieldElement zero = w.basis().zero().a();
  std::vector<Vector<FieldElement>> rows;
  for (const auto& r : w.basis_vectors()) {
    Vector<FieldElement> v;
    for (const auto& x : r) v.push_back(x.a());
    rows.push_back(std::move(v));
  }
  return Subspace<FieldElement>::span(rows, w.ambient_dim(), zero);
}

FieldElement angle_with_hypersurface(const QuadraticSpace& space, const Vector<FieldElement>& e,
                                     const Subspace<FieldElement>& z) {
  const FieldElement qe = space.q(e);
  if (qe.is_zero()) throw DegenerateRestriction();
  if (z.dim() == 0) return qe.zero_like();
  const Vector<FieldElement> p = project_q(space.gram(), z, e);
  return space.q(p) / qe;
}

}  // namespace hyperarith
