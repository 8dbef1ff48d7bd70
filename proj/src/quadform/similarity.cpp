#include "hyperarith/quadform/similarity.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

#include "hyperarith/quadform/local.hpp"

namespace hyperarith {
namespace {

constexpr long kAuxiliaryPrimeLimit = 100000;

std::vector<Rational> rational_diagonal(const Matrix<Rational>& g) {
  const auto cd = symmetric_diagonalize(g);
  std::vector<Rational> d;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    if (sgn(cd.diagonal(i, i)) == 0) throw DegenerateForm();
    d.push_back(cd.diagonal(i, i));
  }
  return d;
}

std::size_t positives(const std::vector<Rational>& d) {
  return static_cast<std::size_t>(std::count_if(d.begin(), d.end(), [](const Rational& x) { return sgn(x) > 0; }));
}

IsometryResult isometric_diagonal(const std::vector<Rational>& d1, const std::vector<Rational>& d2,
                                  const std::vector<Integer>& primes) {
  if (d1.size() != d2.size()) return {false, "dimension"};
  if (positives(d1) != positives(d2)) return {false, "signature"};
  if (discriminant_class(d1) != discriminant_class(d2)) return {false, "discriminant"};
  for (const auto& p : primes)
    if (hasse_invariant(d1, p) != hasse_invariant(d2, p)) return {false, "hasse at " + p.get_str()};
  return {true, ""};
}

std::vector<Rational> scaled(const std::vector<Rational>& d, const Rational& lambda) {
  std::vector<Rational> out(d);
  for (auto& x : out) x *= lambda;
  return out;
}

std::vector<Rational> concat(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out(a);
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::optional<FieldElement> scalar_multiple(const Matrix<FieldElement>& g1, const Matrix<FieldElement>& g2) {
  std::optional<FieldElement> lambda;
  for (std::size_t i = 0; i < g1.rows(); ++i) {
    for (std::size_t j = 0; j < g1.cols(); ++j) {
      if (g1(i, j).is_zero() != g2(i, j).is_zero()) return std::nullopt;
      if (g1(i, j).is_zero()) continue;
      const FieldElement r = g2(i, j) / g1(i, j);
      if (!lambda) lambda = r;
      else if (!(*lambda == r)) return std::nullopt;
    }
  }
  return lambda;
}

// q = <alpha> + r: first row and column vanish off the diagonal.
bool split_first(const Matrix<FieldElement>& g) {
  for (std::size_t j = 1; j < g.cols(); ++j)
    if (!g(0, j).is_zero()) return false;
  return true;
}

bool common_block(const Matrix<FieldElement>& g1, const Matrix<FieldElement>& g2) {
  if (!split_first(g1) || !split_first(g2)) return false;
  for (std::size_t i = 1; i < g1.rows(); ++i)
    for (std::size_t j = 1; j < g1.cols(); ++j)
      if (!(g1(i, j) == g2(i, j))) return false;
  return true;
}

bool signatures_compatible(const Signature& a, const Signature& b) {
  const bool same = a.positive == b.positive && a.negative == b.negative;
  const bool swapped = a.positive == b.negative && a.negative == b.positive;
  return a.zero == b.zero && (same || swapped);
}

FieldElement diagonal_product(const Matrix<FieldElement>& g) {
  const auto cd = symmetric_diagonalize(g);
  FieldElement p = g.zero().one_like();
  for (std::size_t i = 0; i < g.rows(); ++i) p *= cd.diagonal(i, i);
  return p;
}

std::optional<Integer> first_factor(const std::vector<Rational>& d1, const std::vector<Rational>& d2,
                                    const std::vector<Integer>& candidates,
                                    const std::vector<Integer>& primes, Execution exec) {
  const long n = static_cast<long>(candidates.size());
  if (exec == Execution::Serial) {
    for (long i = 0; i < n; ++i)
      if (isometric_diagonal(scaled(d1, Rational(candidates[i])), d2, primes).isometric) return candidates[i];
    return std::nullopt;
  }
  long best = std::numeric_limits<long>::max();
#pragma omp parallel for schedule(dynamic) reduction(min : best)
  for (long i = 0; i < n; ++i) {
    if (i >= best) continue;
    if (isometric_diagonal(scaled(d1, Rational(candidates[i])), d2, primes).isometric) best = std::min(best, i);
  }
  if (best == std::numeric_limits<long>::max()) return std::nullopt;
  return candidates[static_cast<std::size_t>(best)];
}

bool is_prime(const Integer& p) { return mpz_probab_prime_p(p.get_mpz_t(), 25) != 0; }

// D is a square in Q_p iff it pairs trivially with every square class.
bool local_square(const Integer& d, const Integer& p) {
  std::vector<Integer> classes;
  if (p == 2) {
    classes = {-1, 2, 5};
  } else {
    Integer u = 2;
    while (mpz_legendre(u.get_mpz_t(), p.get_mpz_t()) != -1) ++u;
    classes = {p, u};
  }
  return std::all_of(classes.begin(), classes.end(),
                     [&](const Integer& x) { return hilbert_symbol(Rational(d), Rational(x), p) == 1; });
}

// Even rank: lambda q1 = q2 needs (lambda, D)_p = c_p(q1) c_p(q2) at every p, where
// D = (-1)^(m/2) disc. Such lambda exists iff the invariants agree wherever D is
// a local square; it may need one prime outside the bad set.
std::optional<Integer> unmatched_split_place(const std::vector<Rational>& d1, const std::vector<Rational>& d2,
                                             const std::vector<Integer>& primes) {
  Integer d = discriminant_class(d1);
  if (d1.size() % 4 == 2) d = -d;
  for (const auto& p : primes)
    if (local_square(d, p) && hasse_invariant(d1, p) != hasse_invariant(d2, p)) return p;
  return std::nullopt;
}

SimilarityVerdict similar_over_Q(const Matrix<Rational>& g1, const Matrix<Rational>& g2,
                                 SimilarityVerdict v, Execution exec) {
  const FieldPtr q = NumberField::rationals();
  const auto d1 = rational_diagonal(g1);
  const auto d2 = rational_diagonal(g2);
  const std::size_t p1 = positives(d1), p2 = positives(d2), m = d1.size();
  if (p1 != p2 && p1 != m - p2) {
    v.status = SimilarityStatus::NotSimilar;
    v.reason = "signature";
    return v;
  }
  if (m % 2 == 0 && discriminant_class(d1) != discriminant_class(d2)) {
    v.status = SimilarityStatus::NotSimilar;
    v.reason = "discriminant";
    return v;
  }
  const auto candidates = similarity_candidates(d1, d2);
  v.notes.push_back(std::to_string(candidates.size()) + " candidate factors searched");
  if (auto lambda = find_similarity_factor(d1, d2, candidates, exec)) {
    v.status = SimilarityStatus::Similar;
    v.lambda = FieldElement(q, Rational(*lambda));
    return v;
  }
  const auto primes = bad_primes(concat(d1, d2));
  if (m % 2 == 1) {
    v.status = SimilarityStatus::NotSimilar;
    v.reason = "hasse";
    return v;
  }
  if (const auto p = unmatched_split_place(d1, d2, primes)) {
    v.status = SimilarityStatus::NotSimilar;
    v.reason = "hasse at " + p->get_str();
    return v;
  }
  for (Integer p = 3; p < kAuxiliaryPrimeLimit; ++p) {
    if (!is_prime(p) || std::binary_search(primes.begin(), primes.end(), p)) continue;
    std::vector<Integer> shifted;
    shifted.reserve(candidates.size());
    for (const auto& u : candidates) shifted.push_back(u * p);
    auto extended = primes;
    extended.insert(std::upper_bound(extended.begin(), extended.end(), p), p);
    if (auto lambda = first_factor(d1, d2, shifted, extended, exec)) {
      v.notes.push_back("auxiliary prime " + p.get_str());
      v.status = SimilarityStatus::Similar;
      v.lambda = FieldElement(q, Rational(*lambda));
      return v;
    }
  }
  v.notes.push_back("no auxiliary prime below " + std::to_string(kAuxiliaryPrimeLimit));
  return v;
}

}  // namespace

IsometryResult isometric_over_Q(const Matrix<Rational>& g1, const Matrix<Rational>& g2) {
  if (g1.rows() != g2.rows()) return {false, "dimension"};
  const auto d1 = rational_diagonal(g1);
  const auto d2 = rational_diagonal(g2);
  const auto primes = bad_primes(concat(d1, d2));
  auto result = isometric_diagonal(d1, d2, primes);
#ifndef NDEBUG
  for (Integer p = 3; p < 60; ++p) {
    if (!mpz_probab_prime_p(p.get_mpz_t(), 25)) continue;
    if (std::binary_search(primes.begin(), primes.end(), p)) continue;
    assert(hasse_invariant(d1, p) == 1 && hasse_invariant(d2, p) == 1);
  }
#endif
  return result;
}

std::vector<Integer> similarity_candidates(const std::vector<Rational>& d1,
                                           const std::vector<Rational>& d2) {
  const auto primes = bad_primes(concat(d1, d2));
  if (primes.size() > 24) throw RankTooLarge("too many bad primes for the similarity search");
  std::vector<Integer> out;
  const std::size_t count = std::size_t{1} << primes.size();
  out.reserve(2 * count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    Integer prod = 1;
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (mask >> i & 1) prod *= primes[i];
    out.push_back(prod);
    out.push_back(-prod);
  }
  std::sort(out.begin(), out.end(), [](const Integer& a, const Integer& b) {
    const int c = cmp(abs(a), abs(b));
    return c != 0 ? c < 0 : a > b;
  });
  return out;
}

std::optional<Integer> find_similarity_factor(const std::vector<Rational>& d1,
                                              const std::vector<Rational>& d2,
                                              const std::vector<Integer>& candidates,
                                              Execution exec) {
  return first_factor(d1, d2, candidates, bad_primes(concat(d1, d2)), exec);
}

std::string to_string(SimilarityStatus s) {
  switch (s) {
    case SimilarityStatus::Similar: return "Similar";
    case SimilarityStatus::NotSimilar: return "NotSimilar";
    default: return "Unknown";
  }
}

SimilarityVerdict similar(const QuadraticSpace& q1, const QuadraticSpace& q2, Execution exec) {
  if (!(*q1.field() == *q2.field())) throw FieldMismatch();
  SimilarityVerdict v;
  if (q1.rank() != q2.rank()) {
    v.status = SimilarityStatus::NotSimilar;
    v.reason = "dimension";
    return v;
  }
  if (!q1.is_nondegenerate() || !q2.is_nondegenerate()) throw DegenerateForm();
  const auto& g1 = q1.gram();
  const auto& g2 = q2.gram();

  if (auto lambda = scalar_multiple(g1, g2)) {
    v.status = SimilarityStatus::Similar;
    v.lambda = *lambda;
    v.notes.push_back("second Gram matrix is a scalar multiple of the first");
    return v;
  }

  std::optional<FieldElement> block_root;
  const bool has_block = common_block(g1, g2);
  if (has_block) {
    const FieldElement ratio = g2(0, 0) / g1(0, 0);
    block_root = is_square(ratio);
    if (block_root)
      v.notes.push_back("common block: alpha2/alpha1 = " + ratio.to_string() + " = (" + block_root->to_string() +
                        ")^2, isometric with lambda = 1");
    else
      v.notes.push_back("common block: alpha2/alpha1 = " + ratio.to_string() +
                        " is not a square, lambda = 1 gives no isometry");
  }

  if (q1.field()->is_rationals()) return similar_over_Q(*q1.rational_gram(), *q2.rational_gram(), v, exec);

  const auto& field = *q1.field();
  for (std::size_t j = 0; j < field.real_embedding_count(); ++j) {
    if (!signatures_compatible(signature_at(g1, j), signature_at(g2, j))) {
      v.status = SimilarityStatus::NotSimilar;
      v.reason = "signature at embedding " + std::to_string(j);
      return v;
    }
  }
  if (q1.rank() % 2 == 0) {
    const FieldElement ratio = diagonal_product(g2) / diagonal_product(g1);
    if (auto cert = certify_nonsquare(ratio)) {
      v.status = SimilarityStatus::NotSimilar;
      v.reason = "discriminant";
      v.notes.push_back("discriminant ratio " + ratio.to_string() + " is not a square: " + cert->describe());
      return v;
    }
  }
  if (has_block && block_root) {
    v.status = SimilarityStatus::Similar;
    v.lambda = g1.zero().one_like();
    return v;
  }
  v.status = SimilarityStatus::Unknown;
  v.notes.push_back("no decisive invariant over a field other than Q");
  return v;
}

FieldComparison compare_fields(const FieldPtr& k1, const FieldPtr& k2) {
  FieldComparison c;
  if (k1->degree() != k2->degree()) {
    c.relation = FieldRelation::NotIsomorphic;
    c.reason = "field degree";
    return c;
  }
  if (k1->degree() == 1) {
    c.relation = FieldRelation::Isomorphic;
    c.generator_image = FieldElement(k2, -k1->defining_polynomial().coefficient(0));
    c.reason = "both fields are Q";
    return c;
  }
  if (k1->defining_polynomial() == k2->defining_polynomial() &&
      k1->chosen_embedding() == k2->chosen_embedding()) {
    c.relation = FieldRelation::Isomorphic;
    c.generator_image = FieldElement::generator(k2);
    c.reason = "identical defining data";
    return c;
  }
  if (k1->degree() != 2) {
    c.relation = FieldRelation::Unknown;
    c.reason = "isomorphism test implemented for degree at most 2";
    return c;
  }
  // t^2 + b t + c has a root in k2 iff b^2 - 4c is a square there.
  const auto& f = k1->defining_polynomial();
  const Rational b = f.coefficient(1), cc = f.coefficient(0);
  const FieldElement disc(k2, b * b - 4 * cc);
  const auto s = is_square(disc);
  if (!s) {
    c.relation = FieldRelation::NotIsomorphic;
    c.reason = "defining polynomial has no root in the other field";
    if (auto cert = certify_nonsquare(disc)) c.reason += " (" + cert->describe() + ")";
    else c.relation = FieldRelation::Unknown;
    return c;
  }
  const RationalInterval& target = k1->root_interval(k1->chosen_embedding());
  const std::size_t j = k2->chosen_embedding();
  for (int sign : {1, -1}) {
    const FieldElement r = (FieldElement(k2, -b) + FieldElement(k2, Rational(sign)) * *s) / FieldElement(k2, Rational(2));
    if (sign_at_embedding(r - FieldElement(k2, target.lo), j) > 0 &&
        sign_at_embedding(r - FieldElement(k2, target.hi), j) <= 0) {
      c.relation = FieldRelation::Isomorphic;
      c.generator_image = r;
      c.reason = "defining polynomial has a root in the other field";
      return c;
    }
  }
  c.relation = FieldRelation::Unknown;
  c.reason = "no embedding-compatible isomorphism found";
  return c;
}

FieldElement transport(const FieldElement& x, const FieldElement& image) {
  FieldElement out = image.zero_like();
  FieldElement power = image.one_like();
  for (const auto& c : x.coefficients()) {
    out += FieldElement(image.field(), c) * power;
    power *= image;
  }
  return out;
}

std::string to_string(CommensurabilityStatus s) {
  switch (s) {
    case CommensurabilityStatus::Commensurable: return "Commensurable";
    case CommensurabilityStatus::NotCommensurable: return "NotCommensurable";
    default: return "Unknown";
  }
}

CommensurabilityVerdict commensurable(const QuadraticSpace& s1, const QuadraticSpace& s2, Execution exec) {
  if (!is_admissible(s1).admissible || !is_admissible(s2).admissible) throw NotAdmissible();
  CommensurabilityVerdict v;
  v.fields = compare_fields(s1.field(), s2.field());
  if (v.fields.relation == FieldRelation::NotIsomorphic) {
    v.status = CommensurabilityStatus::NotCommensurable;
    v.reason = v.fields.reason;
    return v;
  }
  if (v.fields.relation == FieldRelation::Unknown) {
    v.status = CommensurabilityStatus::Unknown;
    v.reason = v.fields.reason;
    return v;
  }
  const auto& g1 = s1.gram();
  Matrix<FieldElement> moved(g1.rows(), g1.cols(), FieldElement(s2.field(), Rational(0)));
  for (std::size_t i = 0; i < g1.rows(); ++i)
    for (std::size_t j = 0; j < g1.cols(); ++j) moved(i, j) = transport(g1(i, j), *v.fields.generator_image);
  v.similarity = similar(QuadraticSpace(std::move(moved)), s2, exec);
  switch (v.similarity->status) {
    case SimilarityStatus::Similar:
      v.status = CommensurabilityStatus::Commensurable;
      v.reason = "isomorphic fields and similar forms";
      break;
    case SimilarityStatus::NotSimilar:
      v.status = CommensurabilityStatus::NotCommensurable;
      v.reason = "forms not similar: " + v.similarity->reason;
      break;
    default:
      v.status = CommensurabilityStatus::Unknown;
      v.reason = "similarity undecided";
  }
  return v;
}

}  // namespace hyperarith
