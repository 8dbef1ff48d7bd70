#include "hyperarith/linalg/symmetric.hpp"

namespace hyperarith {

Signature signature_at(const Matrix<FieldElement>& g, std::size_t embedding,
                       const DiagonalizeOptions& options) {
  const auto cd = symmetric_diagonalize(g, options);
  Signature s;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    switch (sign_at_embedding(cd.diagonal(i, i), embedding)) {
      case 1: ++s.positive; break;
      case -1: ++s.negative; break;
      default: ++s.zero; break;
    }
  }
  return s;
}

Signature signature(const Matrix<FieldElement>& g, const DiagonalizeOptions& options) {
  return signature_at(g, g.zero().field()->chosen_embedding(), options);
}

Signature signature(const Matrix<Rational>& g, const DiagonalizeOptions& options) {
  const auto cd = symmetric_diagonalize(g, options);
  Signature s;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    const int sg = sgn(cd.diagonal(i, i));
    if (sg > 0) ++s.positive;
    else if (sg < 0) ++s.negative;
    else ++s.zero;
  }
  return s;
}

}  // namespace hyperarith
