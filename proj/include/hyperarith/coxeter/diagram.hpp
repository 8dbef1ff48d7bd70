#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace hyperarith {

/// Edge label m of a Coxeter diagram; kInfiniteLabel encodes m = infinity.
inline constexpr int kInfiniteLabel = 0;

struct CoxeterEdge {
  std::size_t i = 0;  // 0-based, i < j
  std::size_t j = 0;
  int label = 3;
  bool operator==(const CoxeterEdge&) const = default;
};

class CoxeterDiagram {
 public:
  CoxeterDiagram() = default;
  /// Validates indices and labels; absent pairs have label 2.
  CoxeterDiagram(std::size_t rank, std::vector<CoxeterEdge> edges);

  std::size_t rank() const { return rank_; }
  const std::vector<CoxeterEdge>& edges() const { return edges_; }
  /// 2 when i and j are not joined.
  int label(std::size_t i, std::size_t j) const;
  bool joined(std::size_t i, std::size_t j) const { return i != j && label(i, j) != 2; }

  /// Subdiagram on the given vertices, renumbered in the given order.
  CoxeterDiagram induced(const std::vector<std::size_t>& vertices) const;
  CoxeterDiagram permuted(const std::vector<std::size_t>& order) const { return induced(order); }
  /// Vertex sets of the connected components, each ascending.
  std::vector<std::vector<std::size_t>> components() const;

  std::string to_text() const;
  bool operator==(const CoxeterDiagram&) const = default;

 private:
  std::size_t rank_ = 0;
  std::vector<CoxeterEdge> edges_;  // sorted by (i, j)
  std::vector<int> labels_;         // rank x rank, 2 for absent
};

std::string label_to_string(int label);

/// Grammar: `vertices N`, then `edge i j m` with m in {2,3,4,5,6,inf};
/// 1-based indices; `#` starts a comment.
CoxeterDiagram parse_diagram(std::string_view text);

}  // namespace hyperarith
