#include "hyperarith/coxeter/diagram.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "hyperarith/core/error.hpp"
#include "hyperarith/core/text.hpp"

namespace hyperarith {

std::string label_to_string(int label) { return label == kInfiniteLabel ? "inf" : std::to_string(label); }

CoxeterDiagram::CoxeterDiagram(std::size_t rank, std::vector<CoxeterEdge> edges)
    : rank_(rank), labels_(rank * rank, 2) {
  for (auto e : edges) {
    if (e.i >= rank || e.j >= rank) throw Error("edge endpoint out of range");
    if (e.i == e.j) throw Error("self-loop at vertex " + std::to_string(e.i + 1));
    if (e.label != kInfiniteLabel && (e.label < 2 || e.label > 6))
      throw UnsupportedLabel("unsupported edge label " + std::to_string(e.label));
    if (e.i > e.j) std::swap(e.i, e.j);
    if (labels_[e.i * rank + e.j] != 2) throw Error("duplicate edge");
    if (e.label == 2) continue;
    labels_[e.i * rank + e.j] = labels_[e.j * rank + e.i] = e.label;
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const CoxeterEdge& a, const CoxeterEdge& b) { return std::tie(a.i, a.j) < std::tie(b.i, b.j); });
}

int CoxeterDiagram::label(std::size_t i, std::size_t j) const {
  if (i == j) return 1;
  return labels_.at(i * rank_ + j);
}

CoxeterDiagram CoxeterDiagram::induced(const std::vector<std::size_t>& vertices) const {
  std::vector<CoxeterEdge> es;
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (joined(vertices[a], vertices[b])) es.push_back({a, b, label(vertices[a], vertices[b])});
  return CoxeterDiagram(vertices.size(), std::move(es));
}

std::vector<std::vector<std::size_t>> CoxeterDiagram::components() const {
  std::vector<int> seen(rank_, 0);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < rank_; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp{s}, stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w = 0; w < rank_; ++w) {
        if (!seen[w] && joined(v, w)) {
          seen[w] = 1;
          comp.push_back(w);
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::string CoxeterDiagram::to_text() const {
  std::ostringstream os;
  os << "vertices " << rank_ << "\n";
  for (const auto& e : edges_) os << "edge " << e.i + 1 << " " << e.j + 1 << " " << label_to_string(e.label) << "\n";
  return os.str();
}

using text::to_long;
using text::tokenize;

CoxeterDiagram parse_diagram(std::string_view text) {
  std::optional<std::size_t> rank;
  std::vector<CoxeterEdge> edges;
  std::vector<std::pair<std::size_t, std::size_t>> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto toks = tokenize(line);
    if (toks.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const auto& kw = toks[0];
    if (kw.text == "vertices") {
      if (rank) throw ParseError(line_no, kw.column, "repeated 'vertices' line");
      if (toks.size() != 2) throw ParseError(line_no, kw.column, "expected 'vertices N'");
      const auto n = to_long(toks[1].text);
      if (!n || *n < 1) throw ParseError(line_no, toks[1].column, "vertex count must be a positive integer");
      rank = static_cast<std::size_t>(*n);
    } else if (kw.text == "edge") {
      if (toks.size() != 4) throw ParseError(line_no, kw.column, "expected 'edge i j m'");
      long idx[2];
      for (int k = 0; k < 2; ++k) {
        const auto v = to_long(toks[1 + k].text);
        if (!v) throw ParseError(line_no, toks[1 + k].column, "vertex index must be an integer");
        idx[k] = *v - 1;
      }
      if (idx[0] == idx[1]) throw ParseError(line_no, toks[2].column, "self-loop");
      if (!rank) throw ParseError(line_no, kw.column, "'edge' before 'vertices'");
      for (int k = 0; k < 2; ++k)
        if (idx[k] < 0 || static_cast<std::size_t>(idx[k]) >= *rank)
          throw ParseError(line_no, toks[1 + k].column, "vertex index out of range");
      const auto lt = toks[3];
      int label;
      if (lt.text == "inf") {
        label = kInfiniteLabel;
      } else if (lt.text == "dotted") {
        throw ParseError(line_no, lt.column, "dotted edges are not supported");
      } else {
        const auto m = to_long(lt.text);
        if (!m) throw ParseError(line_no, lt.column, "edge label must be an integer or 'inf'");
        if (*m < 2 || *m > 6)
          throw UnsupportedLabel("line " + std::to_string(line_no) + ", column " + std::to_string(lt.column) +
                                 ": unsupported edge label " + std::string(lt.text));
        label = static_cast<int>(*m);
      }
      const auto lo = static_cast<std::size_t>(std::min(idx[0], idx[1]));
      const auto hi = static_cast<std::size_t>(std::max(idx[0], idx[1]));
      const std::pair<std::size_t, std::size_t> key{lo, hi};
      if (std::find(seen.begin(), seen.end(), key) != seen.end())
        throw ParseError(line_no, kw.column, "duplicate edge");
      seen.push_back(key);
      edges.push_back({static_cast<std::size_t>(idx[0]), static_cast<std::size_t>(idx[1]), label});
    } else {
      throw ParseError(line_no, kw.column, "unknown keyword '" + std::string(kw.text) + "'");
    }
    if (end == text.size()) break;
  }
  if (!rank) throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing 'vertices' line");
  return CoxeterDiagram(*rank, std::move(edges));
}

}  // namespace hyperarith
