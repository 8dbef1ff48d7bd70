#include "hyperarith/hybrid/complex.hpp"

#include <map>
#include <set>

#include "hyperarith/core/parallel.hpp"
#include "hyperarith/hybrid/glue.hpp"

namespace hyperarith {
namespace {

Matrix<FieldElement> block_diagonal(const FieldElement& alpha, const Matrix<FieldElement>& q) {
  Matrix<FieldElement> g(q.rows() + 1, q.rows() + 1, alpha.zero_like());
  g(0, 0) = alpha;
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = 0; j < q.cols(); ++j) g(i + 1, j + 1) = q(i, j);
  return g;
}

std::optional<FieldElement> scale_between(const Matrix<FieldElement>& from, const Matrix<FieldElement>& to) {
  if (from.rows() != to.rows()) return std::nullopt;
  std::optional<FieldElement> lambda;
  for (std::size_t i = 0; i < from.rows(); ++i) {
    for (std::size_t j = 0; j < from.cols(); ++j) {
      if (from(i, j).is_zero() != to(i, j).is_zero()) return std::nullopt;
      if (from(i, j).is_zero()) continue;
      FieldElement r = to(i, j) / from(i, j);
      if (!lambda) lambda = r;
      else if (!(*lambda == r)) return std::nullopt;
    }
  }
  return lambda;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
  return out;
}

void check_labelled_graph(const BlockComplex& c, std::vector<std::string>& problems) {
  const std::size_t k = c.blocks.size();
  // out/in counts per generator.
  std::vector<std::map<std::string, int>> out(k), in(k);
  for (const auto& g : c.gluings) {
    std::size_t from = g.first, to = g.second;
    std::string gen = g.label;
    if (gen == "a^-1" || gen == "b^-1") {
      std::swap(from, to);
      gen = gen.substr(0, 1);
    }
    if (gen != "a" && gen != "b") {
      problems.push_back("gl edge " + c.blocks[g.first].label() + "-" + c.blocks[g.second].label() +
                         " needs a label in {a, a^-1, b, b^-1}");
      continue;
    }
    ++out[from][gen];
    ++in[to][gen];
  }
  for (std::size_t v = 0; v < k; ++v) {
    for (const char* gen : {"a", "b"}) {
      if (out[v][gen] != 1 || in[v][gen] != 1)
        problems.push_back("vertex " + c.blocks[v].label() + " must have exactly one incoming and one outgoing " +
                           gen + "-edge");
    }
  }
  std::vector<std::size_t> class_sizes;
  std::vector<const QuadraticSpace*> reps;
  for (const auto& b : c.blocks) {
    std::size_t idx = 0;
    while (idx < reps.size() && !(*reps[idx] == b.ambient())) ++idx;
    if (idx == reps.size()) {
      reps.push_back(&b.ambient());
      class_sizes.push_back(0);
    }
    ++class_sizes[idx];
  }
  if (class_sizes.size() != 2 || (class_sizes[0] != 1 && class_sizes[1] != 1))
    problems.push_back("gl graph must be 2-colored with exactly one vertex of the second color");
}

void check_cycle(const BlockComplex& c, std::vector<std::string>& problems) {
  const std::size_t k = c.blocks.size();
  if (k < 2) problems.push_back("cycle pattern needs at least 2 blocks");
  if (c.gluings.size() != k) problems.push_back("cycle pattern needs as many gluings as blocks");
  std::vector<int> degree(k, 0);
  std::vector<std::size_t> parent(k);
  for (std::size_t i = 0; i < k; ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : c.gluings) {
    ++degree[g.first];
    ++degree[g.second];
    parent[find(g.first)] = find(g.second);
  }
  for (std::size_t v = 0; v < k; ++v)
    if (degree[v] != 2) problems.push_back("block " + c.blocks[v].label() + " must meet exactly two gluings");
  for (std::size_t v = 1; v < k; ++v)
    if (find(v) != find(0)) {
      problems.push_back("cycle pattern must be connected");
      break;
    }
}

}  // namespace

BuildingBlock::BuildingBlock(std::string label, FieldElement alpha, QuadraticSpace shared_form)
    : label_(std::move(label)),
      alpha_(std::move(alpha)),
      shared_(std::move(shared_form)),
      ambient_(block_diagonal(alpha_, shared_.gram())),
      rescale_(alpha_.one_like()) {
  if (!(*alpha_.field() == *shared_.field())) throw FieldMismatch();
  if (alpha_.is_zero()) throw DegenerateForm();
  if (!is_admissible(ambient_).admissible) throw NotAdmissible();
}

BuildingBlock BuildingBlock::normalize(std::string label, const QuadraticSpace& ambient,
                                       const Vector<FieldElement>& e,
                                       const std::optional<QuadraticSpace>& target) {
  const FieldElement alpha = ambient.q(e);
  if (alpha.is_zero()) throw DegenerateRestriction();
  const auto zero = alpha.zero_like();
  const auto line = Subspace<FieldElement>::span({e}, ambient.rank(), zero);
  const auto h = complement_q(ambient.gram(), line);
  Matrix<FieldElement> hyper = restricted_gram(ambient.gram(), h);
  FieldElement lambda = alpha.one_like();
  if (target) {
    auto s = scale_between(hyper, target->gram());
    if (!s) throw MalformedComplex("block " + label + ": hyperplane form is not a rescaling of the target form");
    lambda = *s;
    hyper = target->gram();
  }
  BuildingBlock b(std::move(label), lambda * alpha, QuadraticSpace(std::move(hyper)));
  b.rescale_ = lambda;
  Matrix<FieldElement> basis(ambient.rank(), ambient.rank(), zero);
  for (std::size_t j = 0; j < ambient.rank(); ++j) basis(0, j) = e[j];
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = 0; j < ambient.rank(); ++j) basis(i + 1, j) = h.basis()(i, j);
  b.basis_ = std::move(basis);
  return b;
}

std::string to_string(Pattern p) {
  switch (p) {
    case Pattern::GPSPair: return "gps";
    case Pattern::RaimbaultCycle: return "cycle";
    case Pattern::GelanderLevitGraph: return "gl";
    default: return "general";
  }
}

Pattern parse_pattern(const std::string& s) {
  if (s == "gps") return Pattern::GPSPair;
  if (s == "cycle") return Pattern::RaimbaultCycle;
  if (s == "gl") return Pattern::GelanderLevitGraph;
  if (s == "general") return Pattern::General;
  throw MalformedComplex("unknown pattern '" + s + "'");
}

ComplexReport validate_complex(const BlockComplex& c, Execution exec) {
  std::vector<std::string> problems;
  if (c.blocks.empty()) throw MalformedComplex("complex has no blocks");
  const auto& field = c.blocks.front().ambient().field();
  for (const auto& b : c.blocks)
    if (!(*b.ambient().field() == *field)) problems.push_back("block " + b.label() + " lives over a different field");
  std::set<std::string> labels;
  for (const auto& b : c.blocks)
    if (!labels.insert(b.label()).second) problems.push_back("duplicate block label " + b.label());
  for (const auto& g : c.gluings) {
    if (g.first >= c.blocks.size() || g.second >= c.blocks.size()) {
      throw MalformedComplex("gluing refers to a missing block");
    }
    const auto& b1 = c.blocks[g.first];
    const auto& b2 = c.blocks[g.second];
    const bool loops_allowed = c.pattern == Pattern::General || c.pattern == Pattern::GelanderLevitGraph;
    if (g.first == g.second && !loops_allowed) problems.push_back("block " + b1.label() + " is glued to itself");
    if (!(*b1.shared_form().field() == *b2.shared_form().field()) || !(b1.shared_form() == b2.shared_form()))
      problems.push_back("gluing " + b1.label() + "-" + b2.label() + " joins different hypersurface forms");
  }
  switch (c.pattern) {
    case Pattern::GPSPair:
      if (c.blocks.size() != 2 || c.gluings.size() != 1)
        problems.push_back("gps pattern needs exactly 2 blocks and 1 gluing");
      break;
    case Pattern::RaimbaultCycle: check_cycle(c, problems); break;
    case Pattern::GelanderLevitGraph: check_labelled_graph(c, problems); break;
    case Pattern::General: break;
  }
  if (!problems.empty()) throw MalformedComplex(join(problems));

  ComplexReport report;
  report.pattern = c.pattern;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> unique;
  std::vector<std::pair<std::size_t, std::size_t>> keys;
  for (const auto& g : c.gluings) {
    const std::pair<std::size_t, std::size_t> key{std::min(g.first, g.second), std::max(g.first, g.second)};
    if (unique.emplace(key, keys.size()).second) keys.push_back(key);
  }
  std::vector<CommensurabilityVerdict> verdicts(keys.size());
  for_each_index(keys.size(), exec, [&](std::size_t i) {
    verdicts[i] = commensurable(c.blocks[keys[i].first].ambient(), c.blocks[keys[i].second].ambient(),
                                Execution::Serial);
  });
  for (const auto& g : c.gluings) {
    const std::size_t idx = unique.at({std::min(g.first, g.second), std::max(g.first, g.second)});
    report.pairs.push_back(PairAnalysis{g.first, g.second, verdicts[idx]});
    if (!report.dissimilar_pair && verdicts[idx].status == CommensurabilityStatus::NotCommensurable)
      report.dissimilar_pair = report.pairs.size() - 1;
  }
  return report;
}

std::string to_string(FinitenessStatus s) {
  switch (s) {
    case FinitenessStatus::HypothesesMet: return "HypothesesMet";
    case FinitenessStatus::HypothesesNotMet: return "HypothesesNotMet";
    default: return "HypothesesUnknown";
  }
}

FinitenessReport finiteness_verdict(const BlockComplex& c, Execution exec) {
  const ComplexReport validated = validate_complex(c, exec);
  FinitenessReport r;
  bool unknown = false;
  for (std::size_t i = 0; i < c.gluings.size(); ++i) {
    const auto glue = GlueMap::from_gluing(c, i);
    const auto& pair = validated.pairs[i];
    GluingSummary s{pair.first, pair.second, pair.verdict.status, glue.ratio, glue.ratio_root,
                    !glue.ratio_is_square()};
    if (pair.verdict.status == CommensurabilityStatus::Unknown) unknown = true;
    r.pairs.push_back(std::move(s));
  }
  if (validated.dissimilar_pair) {
    r.verdict = FinitenessStatus::HypothesesMet;
    const auto& p = validated.pairs[*validated.dissimilar_pair];
    r.notes.push_back("blocks " + c.blocks[p.first].label() + " and " + c.blocks[p.second].label() +
                      " are adjacent and dissimilar");
  } else if (unknown) {
    r.verdict = FinitenessStatus::HypothesesUnknown;
    r.notes.push_back("some adjacent pair could not be decided and no dissimilar pair was found");
  } else {
    r.verdict = FinitenessStatus::HypothesesNotMet;
    r.notes.push_back("all adjacent blocks are similar, so the dissimilarity hypothesis fails and the "
                      "finiteness statement does not apply");
  }
  r.notes.push_back("blocks are modelled by their ambient quadratic spaces only; fundamental groups, "
                    "Zariski density, volumes and cusps are not checked");
  return r;
}

}  // namespace hyperarith
