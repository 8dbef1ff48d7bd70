#include <doctest.h>

#include <algorithm>
#include <map>

#include "hyperarith/core/error.hpp"
#include "hyperarith/quadform/local.hpp"
#include "hyperarith/quadform/similarity.hpp"
#include "support.hpp"

using namespace hyperarith;
using namespace testsupport;

namespace {

long mod(long a, long m) { return ((a % m) + m) % m; }

long valuation(long v, long p, long cap) {
  if (v == 0) return cap;
  long k = 0;
  while (v % p == 0) {
    v /= p;
    ++k;
  }
  return k;
}

/// (a,b)_p for squarefree integers by searching for a primitive solution of
/// a x^2 + b y^2 = z^2 modulo p^k that Hensel-lifts (k = 3 for odd p, 5 for 2).
int hilbert_oracle(long a, long b, long p) {
  const long k = p == 2 ? 5 : 3;
  long m = 1;
  for (long i = 0; i < k; ++i) m *= p;
  const long need = (k - 1) / 2;  // lift when f = 0 mod p^(2v+1), v = min valuation of the gradient
  std::map<long, std::vector<long>> roots;
  for (long z = 0; z < m; ++z) roots[z * z % m].push_back(z);
  for (long x = 0; x < m; ++x)
    for (long y = 0; y < m; ++y) {
      const long r = mod(a * x % m * x + b * y % m * y, m);
      const auto it = roots.find(r);
      if (it == roots.end()) continue;
      for (long z : it->second) {
        if (x % p == 0 && y % p == 0 && z % p == 0) continue;
        const long v = std::min({valuation(mod(2 * a * x, m), p, k), valuation(mod(2 * b * y, m), p, k),
                                 valuation(mod(2 * z, m), p, k)});
        if (v <= need) return 1;
      }
    }
  return -1;
}

long random_squarefree(long bound) {
  while (true) {
    const long v = uniform(-bound, bound);
    if (v != 0 && squarefree_part(Integer(v)) == v) return v;
  }
}

QuadraticSpace qdiag(std::vector<Rational> d) { return QuadraticSpace::diagonal(d); }

std::vector<Rational> diagonal_of(const QuadraticSpace& s) {
  std::vector<Rational> d;
  for (std::size_t i = 0; i < s.rank(); ++i) d.push_back(*s.gram()(i, i).as_rational());
  return d;
}

Matrix<Rational> random_unimodular(std::size_t n) {
  auto s = Matrix<Rational>::identity(n, Rational(0));
  for (int step = 0; step < 6; ++step) {
    const auto i = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1));
    const auto j = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1));
    if (i == j) continue;
    const long f = uniform(-2, 2);
    for (std::size_t c = 0; c < n; ++c) s(i, c) += f * s(j, c);
  }
  return s;
}

}  // namespace

TEST_SUITE("quadform") {

TEST_CASE("inner products") {
  const auto s = qdiag({1, 1, 1, -1});
  const auto k = s.field();
  const auto e4 = lift(k, {0, 0, 0, 1});
  CHECK(s.inner_product(e4, e4) == FieldElement(k, Rational(-1)));
  CHECK(s.inner_product(lift(k, {1, 0, 0, 0}), lift(k, {0, 1, 0, 0})).is_zero());
  const auto u = lift(k, {1, 1, 0, 1}), v = lift(k, {1, 0, 0, 2});
  CHECK(s.inner_product(u, v) == FieldElement(k, Rational(-1)));
  const auto two = FieldElement(k, Rational(2));
  std::vector<FieldElement> uv;
  for (std::size_t i = 0; i < 4; ++i) uv.push_back(u[i] + v[i]);
  CHECK(s.inner_product(u, v) * two == s.q(uv) - s.q(u) - s.q(v));
  CHECK_THROWS_AS(s.inner_product(lift(k, {1, 0}), v), DimensionMismatch);
}

TEST_CASE("admissibility") {
  CHECK(is_admissible(qdiag({1, 1, 1, -1})).admissible);
  const auto k = sqrt_field(2);
  const auto one = FieldElement(k, Rational(1));
  const auto t = FieldElement::generator(k);
  const auto s = QuadraticSpace::diagonal(std::vector<FieldElement>{one, one, one, -t});
  const auto rep = is_admissible(s);
  CHECK(rep.admissible);
  CHECK(rep.signature_at_each_embedding[0] == Signature{4, 0, 0});
  const auto bad = is_admissible(qdiag({1, 1, -1, -1}));
  CHECK_FALSE(bad.admissible);
  CHECK(bad.signature_at_each_embedding[0] == Signature{2, 2, 0});
  const auto wrong = QuadraticSpace::diagonal(std::vector<FieldElement>{one, one, one, -one});
  CHECK_FALSE(is_admissible(wrong).admissible);
  CHECK(is_admissible(wrong).failing_embedding == std::optional<std::size_t>{0});
}

TEST_CASE("hyperboloid membership") {
  const auto s = qdiag({1, 1, 1, -1});
  CHECK(hyperboloid_membership(s, lift(s.field(), {0, 0, 0, 1})));
  CHECK_FALSE(hyperboloid_membership(s, lift(s.field(), {0, 0, 0, -1})));
  const auto k = sqrt_field(2);
  const auto sk = QuadraticSpace::diagonal(std::vector<FieldElement>{
      FieldElement(k, Rational(1)), FieldElement(k, Rational(1)), FieldElement(k, Rational(1)), FieldElement(k, Rational(-1))});
  const auto zero = FieldElement(k, Rational(0));
  CHECK_THROWS_AS(hyperboloid_membership(sk, {zero, zero, zero, zero}), NotAdmissible);
  CHECK_THROWS_AS(hyperboloid_membership(qdiag({1, 1, -1, -1}), lift(s.field(), {0, 0, 0, 1})), NotAdmissible);
}

TEST_CASE("restrictions") {
  const auto s = qdiag({1, 1, 1, -1});
  const auto k = s.field();
  const auto z = FieldElement(k, Rational(0));
  const auto r1 = restrict(s, Subspace<FieldElement>::coordinate({0, 1, 3}, 4, z));
  CHECK_FALSE(r1.degenerate);
  CHECK(r1.space == qdiag({1, 1, -1}));
  const auto r2 = restrict(s, Subspace<FieldElement>::span({lift(k, {1, 0, 0, 1})}, 4, z));
  CHECK(r2.degenerate);
  CHECK(r2.space.gram()(0, 0).is_zero());
  const auto r3 = restrict(s, Subspace<FieldElement>::span({lift(k, {1, 0, 0, 0}), lift(k, {0, 1, 0, 1})}, 4, z));
  CHECK(r3.degenerate);
  CHECK(signature(r3.space.gram()) == Signature{1, 0, 1});
  // Coordinate subspaces through the timelike axis give admissible restrictions.
  for (unsigned mask = 0; mask < 8; ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < 3; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    if (idx.empty()) continue;
    idx.push_back(3);
    const auto r = restrict(s, Subspace<FieldElement>::coordinate(idx, 4, z));
    CHECK(is_admissible(r.space).admissible);
  }
}

TEST_CASE("Hilbert symbol examples") {
  for (const Integer& p : {Integer(0), Integer(2), Integer(3), Integer(5), Integer(7)})
    CHECK(hilbert_symbol(1, 7, p) == 1);
  CHECK(hilbert_symbol(-1, -1, kInfinitePlace) == -1);
  CHECK(hilbert_symbol(2, 3, 3) == -1);
  CHECK(hilbert_oracle(2, 3, 3) == -1);
}

TEST_CASE("Hilbert symbols agree with the brute-force oracle") {
  for (int i = 0; i < 120; ++i) {
    const long a = random_squarefree(30), b = random_squarefree(30);
    for (long p : {2L, 3L, 5L, 7L}) {
      INFO("a=" << a << " b=" << b << " p=" << p);
      CHECK(hilbert_symbol(a, b, p) == hilbert_oracle(a, b, p));
    }
  }
}

TEST_CASE("Hilbert symbol is symmetric, bimultiplicative and obeys the product formula") {
  for (int i = 0; i < 300; ++i) {
    const Rational a = random_nonzero_rational(40, 12), b = random_nonzero_rational(40, 12),
                   c = random_nonzero_rational(40, 12);
    std::vector<Integer> places{kInfinitePlace};
    for (const auto& p : bad_primes({a, b, c})) places.push_back(p);
    int product = 1;
    for (const auto& v : places) {
      CHECK(hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v));
      CHECK(hilbert_symbol(a, b * c, v) == hilbert_symbol(a, b, v) * hilbert_symbol(a, c, v));
      CHECK(hilbert_symbol(a * 9, b / 4, v) == hilbert_symbol(a, b, v));
      product *= hilbert_symbol(a, b, v);
    }
    CHECK(product == 1);
  }
}

TEST_CASE("isometry over Q") {
  CHECK(isometric_over_Q(Matrix<Rational>::diagonal({1, 1, 1, -1}, Rational(0)),
                         Matrix<Rational>::diagonal({1, -1, 1, 1}, Rational(0)))
            .isometric);
  const auto r = isometric_over_Q(Matrix<Rational>::diagonal({1, 1, 1, -1}, Rational(0)),
                                  Matrix<Rational>::diagonal({1, 1, 1, -2}, Rational(0)));
  CHECK_FALSE(r.isometric);
  CHECK(r.reason == "discriminant");
  const auto d11 = Matrix<Rational>::diagonal({1, 1}, Rational(0));
  const auto d22 = Matrix<Rational>::diagonal({2, 2}, Rational(0));
  CHECK(isometric_over_Q(d11, d22).isometric);
  // Explicit witness.
  const auto s = Matrix<Rational>::from_rows({{1, 1}, {1, -1}}, Rational(0));
  CHECK(s.transpose() * d11 * s == d22);
  // Same dimension, signature and discriminant; separated by a Hasse invariant.
  const auto h = isometric_over_Q(Matrix<Rational>::diagonal({1, 1}, Rational(0)),
                                  Matrix<Rational>::diagonal({3, 3}, Rational(0)));
  CHECK_FALSE(h.isometric);
  CHECK(h.reason.rfind("hasse", 0) == 0);
}

TEST_CASE("isometry is invariant under unimodular change of basis") {
  for (int i = 0; i < 40; ++i) {
    std::vector<Rational> d;
    for (int j = 0; j < 4; ++j) d.push_back(Rational(random_squarefree(15)));
    const auto g = Matrix<Rational>::diagonal(d, Rational(0));
    const auto s = random_unimodular(4);
    CHECK(isometric_over_Q(s.transpose() * g * s, g).isometric);
  }
}

TEST_CASE("similarity examples") {
  const auto base = qdiag({1, 1, 1, -1});
  const auto v1 = similar(base, qdiag({2, 2, 2, -2}));
  CHECK(v1.status == SimilarityStatus::Similar);
  REQUIRE(v1.lambda);
  CHECK(*v1.lambda == FieldElement(base.field(), Rational(2)));

  const auto v2 = similar(base, qdiag({1, 1, 1, -2}));
  CHECK(v2.status == SimilarityStatus::NotSimilar);
  CHECK(v2.reason == "discriminant");
  CHECK(discriminant_class({1, 1, 1, -1}) != discriminant_class({1, 1, 1, -2}));

  // Common block <1> vs <3> over diag(1,1,-1): 3 is not a square, and the
  // discriminant classes -1 and -3 already separate the forms in rank 4.
  const auto v3 = similar(base, qdiag({3, 1, 1, -1}));
  CHECK(discriminant_class({3, 1, 1, -1}) == -3);
  CHECK(v3.status == SimilarityStatus::NotSimilar);
  CHECK(v3.reason == "discriminant");
  CHECK_FALSE(v3.notes.empty());

  // Odd rank: lambda = -1 flips the signature.
  const auto v4 = similar(qdiag({1, 1, -1}), qdiag({-1, -1, 1}));
  CHECK(v4.status == SimilarityStatus::Similar);
}

TEST_CASE("similar(q, lambda q) for random lambda, with a verified witness") {
  for (int i = 0; i < 40; ++i) {
    std::vector<Rational> d;
    for (int j = 0; j < 4; ++j) d.push_back(Rational(random_squarefree(20)));
    const Rational lambda = random_nonzero_rational(30, 7);
    std::vector<Rational> e;
    for (const auto& x : d) {
      const long s = uniform(1, 3);
      e.push_back(lambda * x * s * s);
    }
    std::swap(e[0], e[3]);
    const auto v = similar(qdiag(d), qdiag(e));
    REQUIRE(v.status == SimilarityStatus::Similar);
    REQUIRE(v.lambda);
    std::vector<Rational> scaled;
    for (const auto& x : d) scaled.push_back(*v.lambda->as_rational() * x);
    CHECK(isometric_over_Q(Matrix<Rational>::diagonal(scaled, Rational(0)),
                           Matrix<Rational>::diagonal(e, Rational(0)))
              .isometric);
  }
}

TEST_CASE("even rank similarity may need a factor outside the bad primes") {
  // Bad primes 2, 5, 13; the only factors are 3 times a norm from Q(sqrt(-65)).
  const std::vector<Rational> d{1, 1, 1, -65};
  const std::vector<Rational> e{1, 13, 26, Rational(-5, 26)};
  const auto c = similarity_candidates(d, e);
  CHECK_FALSE(find_similarity_factor(d, e, c, Execution::Serial));
  for (const auto exec : {Execution::Serial, Execution::Parallel}) {
    const auto v = similar(qdiag(d), qdiag(e), exec);
    REQUIRE(v.status == SimilarityStatus::Similar);
    REQUIRE(v.lambda);
    CHECK(*v.lambda == FieldElement(v.lambda->field(), Rational(3)));
    std::vector<Rational> scaled;
    for (const auto& x : d) scaled.push_back(Rational(3) * x);
    CHECK(isometric_over_Q(Matrix<Rational>::diagonal(scaled, Rational(0)),
                           Matrix<Rational>::diagonal(e, Rational(0)))
              .isometric);
  }
}

TEST_CASE("similarity verdicts agree with a brute-force factor search") {
  const auto works = [](const std::vector<Rational>& a, const std::vector<Rational>& b, long lambda) {
    std::vector<Rational> scaled;
    for (const auto& x : a) scaled.push_back(Rational(lambda) * x);
    return isometric_over_Q(Matrix<Rational>::diagonal(scaled, Rational(0)),
                            Matrix<Rational>::diagonal(b, Rational(0)))
        .isometric;
  };
  std::vector<long> factors;
  for (long n = 1; n <= 600; ++n) {
    bool squarefree = true;
    for (long k = 2; k * k <= n; ++k)
      if (n % (k * k) == 0) squarefree = false;
    if (squarefree) {
      factors.push_back(n);
      factors.push_back(-n);
    }
  }
  int similar_count = 0;
  for (int trial = 0; trial < 80; ++trial) {
    std::vector<Rational> d1, d2;
    for (int j = 0; j < 4; ++j) d1.push_back(Rational(random_squarefree(30)));
    for (int j = 0; j < 3; ++j) d2.push_back(Rational(random_squarefree(30)));
    d2.push_back(Rational(discriminant_class(d1)) / (d2[0] * d2[1] * d2[2]));
    const auto v = similar(qdiag(d1), qdiag(d2));
    const bool brute = std::any_of(factors.begin(), factors.end(), [&](long f) { return works(d1, d2, f); });
    if (v.status == SimilarityStatus::Similar) {
      ++similar_count;
      REQUIRE(v.lambda);
      const Rational lambda = *v.lambda->as_rational();
      std::vector<Rational> scaled;
      for (const auto& x : d1) scaled.push_back(lambda * x);
      CHECK(isometric_over_Q(Matrix<Rational>::diagonal(scaled, Rational(0)),
                             Matrix<Rational>::diagonal(d2, Rational(0)))
                .isometric);
    } else {
      CHECK(v.status == SimilarityStatus::NotSimilar);
      CHECK_FALSE(brute);
    }
  }
  CHECK(similar_count > 0);
}

TEST_CASE("serial and parallel lambda searches agree") {
  for (int i = 0; i < 30; ++i) {
    std::vector<Rational> d1, d2;
    for (int j = 0; j < 5; ++j) {
      d1.push_back(Rational(random_squarefree(40)));
      d2.push_back(Rational(random_squarefree(40)));
    }
    const auto c = similarity_candidates(d1, d2);
    CHECK(find_similarity_factor(d1, d2, c, Execution::Serial) ==
          find_similarity_factor(d1, d2, c, Execution::Parallel));
  }
}

TEST_CASE("commensurability") {
  const auto base = qdiag({1, 1, 1, -1});
  CHECK(commensurable(base, qdiag({2, 2, 2, -2})).status == CommensurabilityStatus::Commensurable);
  CHECK(commensurable(base, qdiag({1, 1, 1, -2})).status == CommensurabilityStatus::NotCommensurable);
  const auto k = sqrt_field(2);
  const auto one = FieldElement(k, Rational(1));
  const auto sk = QuadraticSpace::diagonal(std::vector<FieldElement>{one, one, one, -FieldElement::generator(k)});
  const auto v = commensurable(base, sk);
  CHECK(v.status == CommensurabilityStatus::NotCommensurable);
  CHECK(v.fields.relation == FieldRelation::NotIsomorphic);
  CHECK_THROWS_AS(commensurable(base, qdiag({1, 1, -1, -1})), NotAdmissible);
}

TEST_CASE("a form is commensurable with exactly one class of a pairwise dissimilar set") {
  const std::vector<std::vector<Rational>> classes{{1, 1, 1, -1}, {1, 1, 1, -2}, {1, 1, 1, -3}, {1, 1, 1, -6}, {1, 1, 1, -7}};
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i + 1; j < classes.size(); ++j)
      REQUIRE(similar(qdiag(classes[i]), qdiag(classes[j])).status == SimilarityStatus::NotSimilar);
  for (int trial = 0; trial < 10; ++trial) {
    const auto& pick = classes[static_cast<std::size_t>(uniform(0, 4))];
    const Rational lambda(uniform(1, 12));
    std::vector<Rational> probe;
    for (const auto& x : pick) {
      const long s = uniform(1, 3);
      probe.push_back(lambda * x * s * s);
    }
    int hits = 0;
    for (const auto& c : classes)
      hits += commensurable(qdiag(c), qdiag(probe)).status == CommensurabilityStatus::Commensurable;
    CHECK(hits == 1);
  }
}

}
