#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperarith/core/execution.hpp"
#include "hyperarith/quadform/quadratic_space.hpp"

namespace hyperarith {

struct IsometryResult {
  bool isometric = false;
  /// Separating invariant when not isometric: "dimension", "signature",
  /// "discriminant" or "hasse at p".
  std::string reason;
};

/// Hasse-Minkowski decision for nondegenerate forms over Q.
IsometryResult isometric_over_Q(const Matrix<Rational>& g1, const Matrix<Rational>& g2);

/// Candidate similarity factors for diagonal forms over Q: +-1 times every
/// squarefree product of bad primes, ordered by absolute value, positive first.
std::vector<Integer> similarity_candidates(const std::vector<Rational>& d1,
                                           const std::vector<Rational>& d2);

/// First candidate lambda (in candidate order) with lambda*d1 isometric to d2.
std::optional<Integer> find_similarity_factor(const std::vector<Rational>& d1,
                                              const std::vector<Rational>& d2,
                                              const std::vector<Integer>& candidates,
                                              Execution exec = Execution::Parallel);

enum class SimilarityStatus { Similar, NotSimilar, Unknown };

std::string to_string(SimilarityStatus s);

struct SimilarityVerdict {
  SimilarityStatus status = SimilarityStatus::Unknown;
  std::optional<FieldElement> lambda;
  /// For NotSimilar, the invariant that separates the forms.
  std::string reason;
  std::vector<std::string> notes;
};

/// q2 isometric to lambda*q1 for some lambda. Complete over Q; over other
/// fields a layered test that may answer Unknown.
SimilarityVerdict similar(const QuadraticSpace& q1, const QuadraticSpace& q2,
                          Execution exec = Execution::Parallel);

enum class FieldRelation { Isomorphic, NotIsomorphic, Unknown };

struct FieldComparison {
  FieldRelation relation = FieldRelation::Unknown;
  /// Image of the generator of the first field in the second, compatible with
  /// the chosen embeddings.
  std::optional<FieldElement> generator_image;
  std::string reason;
};

FieldComparison compare_fields(const FieldPtr& k1, const FieldPtr& k2);

/// Push an element of k1 into k2 along t -> generator_image.
FieldElement transport(const FieldElement& x, const FieldElement& generator_image);

enum class CommensurabilityStatus { Commensurable, NotCommensurable, Unknown };

std::string to_string(CommensurabilityStatus s);

struct CommensurabilityVerdict {
  CommensurabilityStatus status = CommensurabilityStatus::Unknown;
  std::string reason;
  FieldComparison fields;
  std::optional<SimilarityVerdict> similarity;
};

/// Both spaces must be admissible.
CommensurabilityVerdict commensurable(const QuadraticSpace& s1, const QuadraticSpace& s2,
                                      Execution exec = Execution::Parallel);

}  // namespace hyperarith
