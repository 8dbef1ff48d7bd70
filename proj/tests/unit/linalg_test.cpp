#include <doctest.h>

#include "hyperarith/core/error.hpp"
#include "hyperarith/linalg/subspace.hpp"
#include "hyperarith/linalg/symmetric.hpp"
#include "support.hpp"

using namespace hyperarith;
using namespace testsupport;

namespace {

Matrix<Rational> qmat(std::vector<std::vector<Rational>> rows) { return Matrix<Rational>::from_rows(rows, Rational(0)); }

Vector<Rational> qvec(std::vector<long> v) { return Vector<Rational>(v.begin(), v.end()); }

Rational small() { return random_rational(4, 3); }

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("congruence diagonalization examples") {
  const auto d1 = symmetric_diagonalize(Matrix<Rational>::diagonal({1, -1}, Rational(0)));
  CHECK(d1.diagonal == Matrix<Rational>::diagonal({1, -1}, Rational(0)));
  CHECK(d1.transform == Matrix<Rational>::identity(2, Rational(0)));

  const auto g = qmat({{0, 1}, {1, 0}});
  const auto d2 = symmetric_diagonalize(g);
  CHECK(d2.transform.transpose() * g * d2.transform == d2.diagonal);
  CHECK(d2.diagonal.is_diagonal());
  CHECK(d2.diagonal(0, 0) * d2.diagonal(1, 1) < 0);

  // x0^2 + x1^2 - x2^2 after x0 -> x0 + x2.
  const auto s = qmat({{1, 0, 0}, {0, 1, 0}, {1, 0, 1}});
  const auto h = s.transpose() * Matrix<Rational>::diagonal({1, 1, -1}, Rational(0)) * s;
  CHECK(signature(h) == Signature{2, 1, 0});
  CHECK_THROWS_AS(symmetric_diagonalize(qmat({{1, 2}, {3, 4}})), NotSymmetric);
}

TEST_CASE("signatures at embeddings") {
  CHECK(signature(Matrix<Rational>::diagonal({1, 1, 1, -1}, Rational(0))) == Signature{3, 1, 0});
  const auto k = sqrt_field(2);
  const auto t = FieldElement::generator(k);
  const auto one = t.one_like();
  const auto g = Matrix<FieldElement>::diagonal({one, one, -t}, one);
  CHECK(signature_at(g, 0) == Signature{3, 0, 0});
  CHECK(signature_at(g, 1) == Signature{2, 1, 0});
  const auto h = Rational(-1, 2);
  CHECK(signature(qmat({{1, h, h}, {h, 1, h}, {h, h, 1}})) == Signature{2, 0, 1});
}

TEST_CASE("characteristic polynomials") {
  CHECK(charpoly(Matrix<Rational>::identity(2, Rational(0))) == std::vector<Rational>{1, -2, 1});
  CHECK(charpoly(qmat({{0, 2}, {1, 0}})) == std::vector<Rational>{-2, 0, 1});
  for (int i = 0; i < 20; ++i) {
    const auto a = random_matrix<Rational>(4, 4, Rational(0), small);
    const auto c = charpoly(a);
    CHECK(c.back() == 1);
    CHECK(c.front() == determinant(a));  // n even: c_0 = det(-A) = det(A)
  }
}

TEST_CASE("subspace operations") {
  const auto z = Rational(0);
  const auto a = Subspace<Rational>::coordinate({0, 1}, 3, z);
  const auto b = Subspace<Rational>::coordinate({1, 2}, 3, z);
  CHECK(intersect(a, b) == Subspace<Rational>::coordinate({1}, 3, z));
  CHECK(sum(a, b) == Subspace<Rational>::whole(3, z));

  const auto g = Matrix<Rational>::diagonal({1, 1, 1, -1}, z);
  CHECK(complement_q(g, Subspace<Rational>::coordinate({0}, 4, z)) == Subspace<Rational>::coordinate({1, 2, 3}, 4, z));
  const auto line = Subspace<Rational>::span({qvec({1, 1, 0, 0})}, 4, z);
  CHECK(project_q(g, line, qvec({1, 0, 0, 0})) == std::vector<Rational>{Rational(1, 2), Rational(1, 2), 0, 0});
  const auto null = Subspace<Rational>::span({qvec({1, 0, 0, 1})}, 4, z);
  CHECK_THROWS_AS(project_q(g, null, qvec({1, 0, 0, 0})), DegenerateRestriction);

  // Canonical representatives: different spanning sets, same echelon basis.
  const auto s1 = Subspace<Rational>::span({qvec({1, 2, 3, 4}), qvec({0, 1, 1, 1})}, 4, z);
  const auto s2 = Subspace<Rational>::span({qvec({1, 3, 4, 5}), qvec({2, 3, 5, 7})}, 4, z);
  CHECK(s1 == s2);
  CHECK(s1.basis() == s2.basis());
}

TEST_CASE("pivot order independence and Sylvester's law") {
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(uniform(0, 3));
    const auto g = random_symmetric<Rational>(n, Rational(0), small);
    const auto base = signature(g);
    CHECK(base.dimension() == n);
    for (std::uint64_t seed = 1; seed <= 3; ++seed) CHECK(signature(g, DiagonalizeOptions{seed}) == base);
    const auto s = random_invertible<Rational>(n, Rational(0), small);
    CHECK(signature(s.transpose() * g * s) == base);
  }
}

TEST_CASE("determinant class is a congruence invariant") {
  for (int i = 0; i < 40; ++i) {
    const auto g = random_symmetric<Rational>(3, Rational(0), small);
    const auto d = determinant(g);
    if (d == 0) continue;
    const auto s = random_invertible<Rational>(3, Rational(0), small);
    const auto cd = symmetric_diagonalize(s.transpose() * g * s);
    CHECK(square_class(diagonal_product(cd)) == square_class(d));
  }
}

TEST_CASE("orthogonal complements and projections") {
  const auto z = Rational(0);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 3 + static_cast<std::size_t>(uniform(0, 2));
    const auto g = random_symmetric<Rational>(n, z, small);
    if (determinant(g) == 0) continue;
    std::vector<Vector<Rational>> gens;
    const std::size_t k = 1 + static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 2));
    for (std::size_t j = 0; j < k; ++j) gens.push_back(random_matrix<Rational>(1, n, z, small).row_vector(0));
    const auto a = Subspace<Rational>::span(gens, n, z);
    const auto c = complement_q(g, a);
    CHECK(a.dim() + c.dim() == n);
    if (determinant(restricted_gram(g, a)) == 0) {
      CHECK_THROWS_AS(project_q(g, a, gens[0]), DegenerateRestriction);
      continue;
    }
    CHECK(intersect(a, c).dim() == 0);
    const auto v = random_matrix<Rational>(1, n, z, small).row_vector(0);
    const auto w = random_matrix<Rational>(1, n, z, small).row_vector(0);
    const auto pv = project_q(g, a, v);
    CHECK(project_q(g, a, pv) == pv);
    CHECK(a.contains(pv));
    CHECK(bilinear(g, pv, w) == bilinear(g, v, project_q(g, a, w)));
  }
}

}
