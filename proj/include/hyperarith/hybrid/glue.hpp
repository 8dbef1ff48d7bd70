#pragma once

#include <optional>

#include "hyperarith/hybrid/complex.hpp"
#include "hyperarith/hybrid/extension.hpp"
#include "hyperarith/linalg/subspace.hpp"

namespace hyperarith {

/// Phi: V2 -> V1, y0 -> sqrt(alpha2/alpha1) x0, identity on H.
struct GlueMap {
  FieldElement ratio;
  std::optional<FieldElement> ratio_root;
  ExtensionPtr extension;

  static GlueMap from_alphas(const FieldElement& alpha1, const FieldElement& alpha2);
  static GlueMap from_gluing(const BlockComplex& complex, std::size_t gluing);

  bool ratio_is_square() const { return ratio_root.has_value(); }
  Vector<ExtElement> apply(const Vector<ExtElement>& y) const;
};

struct TransportResult {
  bool rational = false;
  /// K-basis of Phi(span(U, xi)) when rational.
  std::optional<Subspace<FieldElement>> basis;
  /// Phi(xi) reduced modulo U.
  Vector<ExtElement> reduced;
};

/// Is Phi(span(U, xi)) defined over K? U must lie in H = {x0 = 0}.
TransportResult transported_subspace_rational(const GlueMap& glue, const Subspace<FieldElement>& u,
                                              const Vector<ExtElement>& xi);

/// K-basis of W when W is stable under sqrt(delta) -> -sqrt(delta).
std::optional<Subspace<FieldElement>> field_of_definition(const Subspace<ExtElement>& w);

/// cos^2 of the angle between e^perp and Z^perp: q(P_Z e) / q(e). Throws
/// DegenerateRestriction when q(e) = 0 or q is singular on Z.
FieldElement angle_with_hypersurface(const QuadraticSpace& space, const Vector<FieldElement>& e,
                                     const Subspace<FieldElement>& z);

}  // namespace hyperarith
