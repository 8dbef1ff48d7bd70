#include "hyperarith/coxeter/vinberg.hpp"

#include <functional>

namespace hyperarith {
namespace {

void extend_cycles(const CoxeterDiagram& d, std::vector<std::size_t>& path, std::vector<int>& used,
                   std::vector<std::vector<std::size_t>>& out) {
  const std::size_t start = path.front(), last = path.back();
  for (std::size_t w = start + 1; w < d.rank(); ++w) {
    if (used[w] || !d.joined(last, w)) continue;
    path.push_back(w);
    used[w] = 1;
    if (path.size() >= 3 && d.joined(w, start) && path[1] < w) out.push_back(path);
    extend_cycles(d, path, used, out);
    used[w] = 0;
    path.pop_back();
  }
}

FieldElement cycle_value(const Matrix<FieldElement>& g, const std::vector<std::size_t>& cyc) {
  const FieldElement two(g.zero().field(), Rational(2));
  FieldElement v = g.zero().one_like();
  for (std::size_t k = 0; k < cyc.size(); ++k) v *= two * g(cyc[k], cyc[(k + 1) % cyc.size()]);
  return v;
}

}  // namespace

std::string to_string(ArithmeticityVerdict v) {
  switch (v) {
    case ArithmeticityVerdict::Arithmetic: return "Arithmetic";
    case ArithmeticityVerdict::QuasiArithmeticOnly: return "QuasiArithmeticOnly";
    default: return "Neither";
  }
}

std::string ArithmeticityReport::field_name() const {
  if (cycle_field_generators.empty()) return "Q";
  std::string s = "Q(";
  for (std::size_t i = 0; i < cycle_field_generators.size(); ++i)
    s += (i ? ", sqrt(" : "sqrt(") + cycle_field_generators[i].get_str() + ")";
  return s + ")";
}

std::vector<CoxeterCycle> coxeter_cycles(const CoxeterDiagram& d) {
  if (d.rank() > kMaxSubgroupRank)
    throw RankTooLarge("cycle enumeration is limited to rank " + std::to_string(kMaxSubgroupRank));
  const auto g = gram_matrix(d);
  std::vector<std::vector<std::size_t>> cycles;
  for (std::size_t s = 0; s < d.rank(); ++s) {
    std::vector<std::size_t> path{s};
    std::vector<int> used(d.rank(), 0);
    used[s] = 1;
    extend_cycles(d, path, used, cycles);
  }
  for (const auto& e : d.edges()) cycles.push_back({e.i, e.j});
  std::vector<CoxeterCycle> out;
  for (auto& c : cycles) {
    FieldElement v = cycle_value(g, c);
    const bool integral = is_algebraic_integer(v);
    out.push_back(CoxeterCycle{std::move(c), std::move(v), integral});
  }
  return out;
}

ArithmeticityReport vinberg_arithmeticity(const CoxeterDiagram& d) {
  const Classification cls = classify(d);
  if (cls.type != DiagramType::Hyperbolic) throw NotHyperbolic();
  const auto& field = coxeter_entry_field();
  const auto g = gram_matrix(d);

  ArithmeticityReport r;
  r.cycles = coxeter_cycles(d);
  r.all_cycles_integral = true;
  for (const auto& c : r.cycles) {
    if (!c.integral && r.all_cycles_integral) {
      r.all_cycles_integral = false;
      std::string verts;
      for (auto v : c.vertices) verts += (verts.empty() ? "" : "-") + std::to_string(v + 1);
      r.certificate = "cycle " + verts + " = " + field.render(c.value) + " is not an algebraic integer";
    }
  }

  // Automorphisms fixing every cycle form the group of the cycle field.
  const auto autos = field.automorphism_signs();
  std::vector<int> fixes(autos.size(), 1);
  for (std::size_t a = 0; a < autos.size(); ++a)
    for (const auto& c : r.cycles)
      if (!(field.apply_automorphism(c.value, autos[a]) == c.value)) {
        fixes[a] = 0;
        break;
      }
  // sqrt(prod of generators in mask) lies in the cycle field iff every fixing
  // automorphism has sign +1 on it.
  const auto& gens = field.generators();
  std::vector<std::size_t> basis_masks;
  std::vector<std::size_t> field_masks;
  for (std::size_t mask = 1; mask < (std::size_t{1} << gens.size()); ++mask) {
    bool fixed = true;
    for (std::size_t a = 0; a < autos.size() && fixed; ++a) {
      if (!fixes[a]) continue;
      int s = 1;
      for (std::size_t i = 0; i < gens.size(); ++i)
        if (mask >> i & 1) s *= autos[a][i];
      fixed = s == 1;
    }
    if (fixed) field_masks.push_back(mask);
  }
  // Greedy GF(2) basis of the fixed masks.
  std::vector<std::size_t> reduced;
  for (auto m : field_masks) {
    std::size_t x = m;
    for (auto b : reduced) x = std::min(x, x ^ b);
    if (x == 0) continue;
    reduced.push_back(x);
    basis_masks.push_back(m);
  }
  for (auto m : basis_masks) {
    Integer d = 1;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (m >> i & 1) d *= gens[i];
    r.cycle_field_generators.push_back(d);
  }
  r.cycle_field_degree = std::size_t{1} << basis_masks.size();

  r.conjugates_semidefinite = true;
  for (std::size_t a = 0; a < autos.size(); ++a) {
    bool identity = true;
    for (int s : autos[a]) identity = identity && s == 1;
    if (identity) continue;
    Matrix<FieldElement> conj(g.rows(), g.cols(), g.zero());
    for (std::size_t i = 0; i < g.rows(); ++i)
      for (std::size_t j = 0; j < g.cols(); ++j) conj(i, j) = field.apply_automorphism(g(i, j), autos[a]);
    EmbeddingCheck e;
    e.signs = autos[a];
    e.trivial_on_cycle_field = fixes[a] != 0;
    e.signature = signature(conj);
    e.semidefinite = e.signature.negative == 0;
    if (!e.trivial_on_cycle_field && !e.semidefinite && r.conjugates_semidefinite) {
      r.conjugates_semidefinite = false;
      std::string sg;
      for (std::size_t i = 0; i < gens.size(); ++i)
        sg += std::string(sg.empty() ? "" : ", ") + "sqrt(" + gens[i].get_str() + ") -> " +
              (autos[a][i] > 0 ? "+" : "-") + "sqrt(" + gens[i].get_str() + ")";
      const std::string msg = "conjugate Gram matrix under " + sg + " is not positive semidefinite";
      r.certificate = r.certificate.empty() ? msg : msg + "; " + r.certificate;
    }
    r.embeddings.push_back(std::move(e));
  }

  if (r.totally_real && r.conjugates_semidefinite)
    r.verdict = r.all_cycles_integral ? ArithmeticityVerdict::Arithmetic : ArithmeticityVerdict::QuasiArithmeticOnly;
  else
    r.verdict = ArithmeticityVerdict::Neither;
  return r;
}

SplittabilityReport unsplittable_check(const CoxeterDiagram& d, std::size_t n, Execution exec) {
  const Classification cls = classify(d);
  if (cls.type != DiagramType::Hyperbolic || cls.n != n) throw NotHyperbolic();
  SplittabilityReport r;
  if (d.rank() == n + 1) {
    r.certified_unsplittable = true;
    r.reason = "simplex";
    return r;
  }
  for (auto& s : special_subgroups(d, exec)) {
    const auto& sig = s.classification.signature;
    if (sig.negative == 1 && sig.positive + 1 == n) r.candidates.push_back(std::move(s));
  }
  if (r.candidates.empty()) {
    r.certified_unsplittable = true;
    r.reason = "no hyperbolic special subgroup";
  } else {
    r.reason = "special subgroups of signature (" + std::to_string(n - 1) + ",1) may bound a splitting wall";
  }
  return r;
}

}  // namespace hyperarith
