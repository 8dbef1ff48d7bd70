#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperarith/algebra/multiquadratic.hpp"
#include "hyperarith/core/execution.hpp"
#include "hyperarith/coxeter/diagram.hpp"
#include "hyperarith/linalg/symmetric.hpp"

namespace hyperarith {

/// Q(sqrt2, sqrt3, sqrt5) with the embedding taking every square root positive.
const MultiquadraticField& coxeter_entry_field();

/// cos(pi/m) in the entry field; the infinite label gives 1.
FieldElement cos_pi_over(int label);

/// g_ii = 1, g_ij = -cos(pi/m_ij).
Matrix<FieldElement> gram_matrix(const CoxeterDiagram& d);

enum class DiagramType { Spherical, Euclidean, Hyperbolic, OtherIndefinite };
enum class VolumeType { Compact, FiniteVolumeNoncompact, InfiniteVolume };

std::string to_string(VolumeType v);

struct Classification {
  DiagramType type = DiagramType::OtherIndefinite;
  Signature signature;
  /// Dimension of the hyperbolic space for Hyperbolic diagrams.
  std::size_t n = 0;
  /// Only for simplex diagrams (Hyperbolic with rank n + 1).
  std::optional<VolumeType> volume;

  /// "Spherical", "Euclidean", "Hyperbolic(n)" or "OtherIndefinite".
  std::string describe() const;
};

/// Type from the signature at the chosen embedding; simplex diagrams also get
/// a volume type from their vertex links.
Classification classify(const CoxeterDiagram& d);

/// Every connected component is Euclidean.
bool is_parabolic(const CoxeterDiagram& d);

struct SpecialSubgroup {
  std::vector<std::size_t> vertices;  // 0-based, ascending
  Classification classification;
};

inline constexpr std::size_t kMaxSubgroupRank = 12;

/// All proper nonempty vertex subsets, ordered by size then lexicographically.
std::vector<SpecialSubgroup> special_subgroups(const CoxeterDiagram& d, Execution exec = Execution::Parallel);

}  // namespace hyperarith
