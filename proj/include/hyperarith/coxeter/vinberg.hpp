#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperarith/coxeter/gram.hpp"

namespace hyperarith {

struct CoxeterCycle {
  std::vector<std::size_t> vertices;  // 0-based; two vertices for an edge square
  FieldElement value;                 // product of b_ij = 2 g_ij around the cycle
  bool integral = false;
};

/// How one automorphism of the entry field acts: its sign vector on
/// (sqrt2, sqrt3, sqrt5), whether it fixes the cycle field, and whether the
/// conjugated Gram matrix is positive semidefinite.
struct EmbeddingCheck {
  std::vector<int> signs;
  bool trivial_on_cycle_field = false;
  bool semidefinite = false;
  Signature signature;
};

enum class ArithmeticityVerdict { Arithmetic, QuasiArithmeticOnly, Neither };

std::string to_string(ArithmeticityVerdict v);

struct ArithmeticityReport {
  std::vector<CoxeterCycle> cycles;
  /// Squarefree d with the cycle field equal to Q(sqrt d : d listed).
  std::vector<Integer> cycle_field_generators;
  std::size_t cycle_field_degree = 1;
  bool totally_real = true;
  bool all_cycles_integral = false;
  bool conjugates_semidefinite = false;
  std::vector<EmbeddingCheck> embeddings;
  ArithmeticityVerdict verdict = ArithmeticityVerdict::Neither;
  std::string certificate;

  std::string field_name() const;
};

/// Simple cycles of the diagram graph (length >= 3) followed by edge squares.
std::vector<CoxeterCycle> coxeter_cycles(const CoxeterDiagram& d);

/// Throws NotHyperbolic unless classify gives Hyperbolic(n).
ArithmeticityReport vinberg_arithmeticity(const CoxeterDiagram& d);

struct SplittabilityReport {
  bool certified_unsplittable = false;
  std::string reason;
  /// Special subgroups of signature (n-1, 1), when not certified.
  std::vector<SpecialSubgroup> candidates;
};

SplittabilityReport unsplittable_check(const CoxeterDiagram& d, std::size_t n,
                                       Execution exec = Execution::Parallel);

}  // namespace hyperarith
