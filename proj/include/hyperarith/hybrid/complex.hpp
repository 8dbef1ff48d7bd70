#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperarith/core/execution.hpp"
#include "hyperarith/quadform/similarity.hpp"

namespace hyperarith {

/// A block modelled by its ambient space V = <alpha> + (H, q), in coordinates
/// (x0, x1, ..., xn) with the cutting hyperplane H = {x0 = 0}.
class BuildingBlock {
 public:
  BuildingBlock(std::string label, FieldElement alpha, QuadraticSpace shared_form);

  /// Bring an arbitrary presentation into block shape: e is a normal vector of
  /// the cutting hyperplane (q(e) != 0) and H = e^perp. When a target form is
  /// given, the whole block is rescaled so that its hyperplane form equals the
  /// target exactly; the factor is recorded.
  static BuildingBlock normalize(std::string label, const QuadraticSpace& ambient,
                                 const Vector<FieldElement>& e,
                                 const std::optional<QuadraticSpace>& target = std::nullopt);

  const std::string& label() const { return label_; }
  const FieldElement& alpha() const { return alpha_; }
  const QuadraticSpace& shared_form() const { return shared_; }
  const QuadraticSpace& ambient() const { return ambient_; }
  /// Factor applied by normalize (1 otherwise).
  const FieldElement& rescale() const { return rescale_; }
  /// Rows: the new basis (e, then a basis of e^perp) in the original coordinates.
  const std::optional<Matrix<FieldElement>>& basis() const { return basis_; }

 private:
  std::string label_;
  FieldElement alpha_;
  QuadraticSpace shared_;
  QuadraticSpace ambient_;
  FieldElement rescale_;
  std::optional<Matrix<FieldElement>> basis_;
};

enum class Pattern { GPSPair, RaimbaultCycle, GelanderLevitGraph, General };

std::string to_string(Pattern p);
Pattern parse_pattern(const std::string& s);

/// Edge of the gluing graph. Labels from {a, a^-1, b, b^-1} are used by the
/// gl pattern; an inverse label reverses the edge direction.
struct Gluing {
  std::size_t first = 0;
  std::size_t second = 0;
  std::string label;
};

struct BlockComplex {
  std::vector<BuildingBlock> blocks;
  std::vector<Gluing> gluings;
  Pattern pattern = Pattern::General;
};

struct PairAnalysis {
  std::size_t first = 0;
  std::size_t second = 0;
  CommensurabilityVerdict verdict;
};

struct ComplexReport {
  Pattern pattern = Pattern::General;
  /// One entry per gluing, in gluing order.
  std::vector<PairAnalysis> pairs;
  /// Index into pairs of the first dissimilar adjacent pair.
  std::optional<std::size_t> dissimilar_pair;
};

/// Structural checks (throws MalformedComplex) and per-gluing commensurability.
ComplexReport validate_complex(const BlockComplex& complex, Execution exec = Execution::Parallel);

enum class FinitenessStatus { HypothesesMet, HypothesesNotMet, HypothesesUnknown };

std::string to_string(FinitenessStatus s);

struct GluingSummary {
  std::size_t first = 0;
  std::size_t second = 0;
  CommensurabilityStatus similarity = CommensurabilityStatus::Unknown;
  FieldElement ratio;
  std::optional<FieldElement> ratio_root;
  /// A nonsquare ratio forces every K-defined crossing submanifold to meet the
  /// cutting hypersurface orthogonally.
  bool forced_orthogonal = false;
};

struct FinitenessReport {
  FinitenessStatus verdict = FinitenessStatus::HypothesesUnknown;
  std::vector<GluingSummary> pairs;
  std::vector<std::string> notes;
};

/// Met when some adjacent pair is certified dissimilar; otherwise Unknown if
/// any adjacent verdict is Unknown, else NotMet.
FinitenessReport finiteness_verdict(const BlockComplex& complex, Execution exec = Execution::Parallel);

}  // namespace hyperarith
