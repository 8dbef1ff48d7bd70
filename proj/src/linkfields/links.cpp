#include "hyperarith/linkfields/links.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "hyperarith/algebra/multiquadratic.hpp"
#include "hyperarith/core/error.hpp"
#include "hyperarith/core/text.hpp"

namespace hyperarith {

namespace {

std::size_t saturating_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) return std::numeric_limits<std::size_t>::max();
  return a * b;
}

std::string generator_name(const Integer& d) { return d == -1 ? "i" : "sqrt(" + d.get_str() + ")"; }

ArithmeticLinkRecord parse_link_line(const text::Line& line, const std::string& origin) {
  const auto& t = line.tokens;
  if (t.size() != 6 || t[2].text != "disc" || t[4].text != "belts")
    throw ParseError(line.number, t[0].column, "expected 'link <name> disc <d> belts <k>'");
  ArithmeticLinkRecord r;
  r.name = std::string(t[1].text);
  r.origin = origin;
  if (r.name.find_first_of("%+") != std::string::npos)
    throw ParseError(line.number, t[1].column, "link names may not contain '%' or '+'");
  const auto d = text::to_long(t[3].text);
  if (!d) throw ParseError(line.number, t[3].column, "discriminant must be an integer");
  r.bianchi_disc = Integer(*d);
  if (*d >= 0 || squarefree_part(r.bianchi_disc) != r.bianchi_disc)
    throw ParseError(line.number, t[3].column, "discriminant must be a negative squarefree integer");
  const auto k = text::to_long(t[5].text);
  if (!k || *k < 1) throw ParseError(line.number, t[5].column, "belt count must be a positive integer");
  r.belt_count = static_cast<std::size_t>(*k);
  return r;
}

void add_record(std::vector<ArithmeticLinkRecord>& table, ArithmeticLinkRecord r, std::size_t line,
                std::size_t column) {
  for (auto& old : table) {
    if (old.name != r.name) continue;
    if (old.bianchi_disc != r.bianchi_disc || old.belt_count != r.belt_count)
      throw ParseError(line, column, "conflicting redefinition of link '" + r.name + "'");
    return;
  }
  table.push_back(std::move(r));
}

}  // namespace

std::vector<ArithmeticLinkRecord> parse_link_table(std::string_view content, const std::string& origin) {
  std::vector<ArithmeticLinkRecord> out;
  for (const auto& line : text::tokenized_lines(content)) {
    if (line.tokens[0].text != "link")
      throw ParseError(line.number, line.tokens[0].column,
                       "unknown keyword '" + std::string(line.tokens[0].text) + "'");
    add_record(out, parse_link_line(line, origin), line.number, line.tokens[1].column);
  }
  return out;
}

const std::vector<ArithmeticLinkRecord>& default_link_table() {
  static const std::vector<ArithmeticLinkRecord> table{
      {"whitehead", Integer(-1), 1, "builtin"},
      {"chain3", Integer(-7), 1, "builtin"},
      {"fivechain", Integer(-15), 2, "builtin"},
  };
  return table;
}

const ArithmeticLinkRecord* find_link(const std::vector<ArithmeticLinkRecord>& table, std::string_view name) {
  for (const auto& r : table)
    if (r.name == name) return &r;
  return nullptr;
}

BeltedManifold BeltedManifold::from_link(const ArithmeticLinkRecord& record) {
  if (record.bianchi_disc >= 0 || squarefree_part(record.bianchi_disc) != record.bianchi_disc)
    throw InvalidField("link discriminant must be a negative squarefree integer");
  if (record.belt_count == 0) throw Error("link record must have at least one belt");
  BeltedManifold m;
  m.generators_ = independent_square_classes({record.bianchi_disc});
  m.belts_ = record.belt_count;
  m.tree_ = std::make_shared<const Node>(Node{record.name, nullptr, nullptr});
  return m;
}

BeltedManifold BeltedManifold::opaque(std::string name, std::size_t degree, std::size_t belts) {
  if (degree == 0) throw Error("opaque generator degree must be positive");
  BeltedManifold m;
  m.opaque_.push_back({name, degree});
  m.belts_ = belts;
  m.tree_ = std::make_shared<const Node>(Node{"[" + name + ", degree " + std::to_string(degree) + "]", nullptr, nullptr});
  return m;
}

std::string BeltedManifold::describe() const {
  auto rec = [](auto&& self, const Node& n) -> std::string {
    if (!n.left) return n.label;
    return "(" + self(self, *n.left) + " # " + self(self, *n.right) + ")";
  };
  return rec(rec, *tree_);
}

BeltedManifold belted_sum(const BeltedManifold& a, const BeltedManifold& b) {
  if (a.belts_ == 0 || b.belts_ == 0) throw NoBeltAvailable();
  BeltedManifold m;
  std::vector<Integer> gens = a.generators_;
  gens.insert(gens.end(), b.generators_.begin(), b.generators_.end());
  m.generators_ = independent_square_classes(gens);
  std::map<std::string, std::size_t> opaque;
  for (const auto* side : {&a.opaque_, &b.opaque_})
    for (const auto& g : *side) {
      auto [it, fresh] = opaque.emplace(g.name, g.degree);
      if (!fresh && it->second != g.degree)
        throw Error("opaque generator '" + g.name + "' used with two different degrees");
    }
  for (const auto& [name, degree] : opaque) m.opaque_.push_back({name, degree});
  m.belts_ = a.belts_ + b.belts_ - 2;
  m.blocks_ = a.blocks_ + b.blocks_;
  m.tree_ = std::make_shared<const BeltedManifold::Node>(BeltedManifold::Node{"#", a.tree_, b.tree_});
  return m;
}

std::string TraceFieldDescriptor::name() const {
  if (generators.empty() && opaque.empty()) return "Q";
  std::string s = "Q(";
  bool first = true;
  for (const auto& g : generators) {
    s += (first ? "" : ", ") + generator_name(g);
    first = false;
  }
  for (const auto& g : opaque) {
    s += (first ? "" : ", ") + g.name;
    first = false;
  }
  return s + ")";
}

TraceFieldDescriptor invariant_trace_field(const BeltedManifold& m) {
  TraceFieldDescriptor f;
  f.generators = m.field_generators();
  f.opaque = m.opaque_generators();
  f.multiquadratic_degree = f.generators.empty() ? 1 : MultiquadraticField::create(f.generators).degree();
  f.degree_lower = f.degree_upper = f.multiquadratic_degree;
  for (const auto& g : f.opaque) {
    f.degree_lower = std::max(f.degree_lower, g.degree);
    f.degree_upper = saturating_mul(f.degree_upper, g.degree);
  }
  return f;
}

std::string to_string(LinkVerdict v) { return v == LinkVerdict::Incommensurable ? "Incommensurable" : "Unknown"; }

IncommensurabilityReport incommensurability_verdict(const BeltedManifold& a, const BeltedManifold& b) {
  const auto fa = invariant_trace_field(a);
  const auto fb = invariant_trace_field(b);
  if (fa.degree_upper < fb.degree_lower || fb.degree_upper < fa.degree_lower)
    return {LinkVerdict::Incommensurable, "degree"};
  // A known field that lacks some sqrt(d) of the other trace field differs from it.
  auto misses = [](const TraceFieldDescriptor& known, const TraceFieldDescriptor& other) {
    if (!known.exact()) return false;
    return std::any_of(other.generators.begin(), other.generators.end(),
                       [&](const Integer& d) { return !in_square_class_span(known.generators, d); });
  };
  if (misses(fa, fb) || misses(fb, fa)) return {LinkVerdict::Incommensurable, "field"};
  return {LinkVerdict::Unknown, ""};
}

DegreeGrowth family_degree_growth(const BeltedManifold& base, const std::vector<std::size_t>& opaque_degrees) {
  if (opaque_degrees.empty()) throw Error("family needs at least one opaque degree");
  const auto f = invariant_trace_field(base);
  DegreeGrowth g;
  for (const auto d : opaque_degrees) {
    if (d == 0) throw Error("opaque generator degree must be positive");
    g.lower_bounds.push_back(std::max(f.degree_lower, d));
  }
  g.strictly_increasing = std::adjacent_find(g.lower_bounds.begin(), g.lower_bounds.end(),
                                             [](std::size_t x, std::size_t y) { return x >= y; }) ==
                          g.lower_bounds.end();
  g.unbounded_certified = g.strictly_increasing && g.lower_bounds.size() >= 2;
  return g;
}

const BeltedManifold& ComposeResult::last() const {
  if (entries.empty()) throw Error("composition produced no manifold");
  return entries.back().manifold;
}

namespace {

class ComposeRunner {
 public:
  explicit ComposeRunner(std::vector<ArithmeticLinkRecord> table) { result_.table = std::move(table); }

  BeltedManifold resolve(const text::Token& tok, std::size_t line) const {
    const std::string_view s = tok.text;
    if (s == "%") {
      if (result_.entries.empty()) throw ParseError(line, tok.column, "'%' used before any result");
      return result_.entries.back().manifold;
    }
    if (s.front() == '%') {
      const auto k = text::to_long(s.substr(1));
      if (!k || *k < 1 || static_cast<std::size_t>(*k) > result_.entries.size())
        throw ParseError(line, tok.column, "no result named '" + std::string(s) + "'");
      return result_.entries[static_cast<std::size_t>(*k) - 1].manifold;
    }
    if (const auto* r = find_link(result_.table, s)) return BeltedManifold::from_link(*r);
    throw ParseError(line, tok.column, "unknown link '" + std::string(s) + "'");
  }

  void push(BeltedManifold m) {
    result_.entries.push_back({"%" + std::to_string(result_.entries.size() + 1), std::move(m)});
  }

  void run(const text::Line& line) {
    const auto& t = line.tokens;
    const auto kw = t[0].text;
    const auto n = line.number;
    if (kw == "link") {
      add_record(result_.table, parse_link_line(line, "script"), n, t[1].column);
    } else if (kw == "sum") {
      if (t.size() != 3) throw ParseError(n, t[0].column, "expected 'sum <x> <y>'");
      const auto x = resolve(t[1], n);
      push(belted_sum(x, resolve(t[2], n)));
    } else if (kw == "opaque") {
      if (t.size() < 2) throw ParseError(n, t[0].column, "expected 'opaque <degree>'");
      const auto d = text::to_long(t[1].text);
      if (!d || *d < 1) throw ParseError(n, t[1].column, "degree must be a positive integer");
      std::size_t belts = 1;
      std::string name = "alpha" + std::to_string(++opaque_count_);
      for (std::size_t i = 2; i < t.size(); i += 2) {
        if (i + 1 >= t.size()) throw ParseError(n, t[i].column, "missing value");
        if (t[i].text == "belts") {
          const auto k = text::to_long(t[i + 1].text);
          if (!k || *k < 0) throw ParseError(n, t[i + 1].column, "belt count must be a nonnegative integer");
          belts = static_cast<std::size_t>(*k);
        } else if (t[i].text == "name") {
          name = std::string(t[i + 1].text);
        } else {
          throw ParseError(n, t[i].column, "unknown option '" + std::string(t[i].text) + "'");
        }
      }
      push(BeltedManifold::opaque(name, static_cast<std::size_t>(*d), belts));
    } else if (kw == "family") {
      if (t.size() < 3) throw ParseError(n, t[0].column, "expected 'family <x> d1 d2 ...'");
      ComposeResult::Family fam;
      fam.base = std::string(t[1].text);
      const auto base = resolve(t[1], n);
      for (std::size_t i = 2; i < t.size(); ++i) {
        const auto d = text::to_long(t[i].text);
        if (!d || *d < 1) throw ParseError(n, t[i].column, "degree must be a positive integer");
        fam.degrees.push_back(static_cast<std::size_t>(*d));
      }
      fam.growth = family_degree_growth(base, fam.degrees);
      result_.families.push_back(std::move(fam));
    } else if (kw == "compare") {
      if (t.size() != 3) throw ParseError(n, t[0].column, "expected 'compare <x> <y>'");
      const auto x = resolve(t[1], n);
      result_.comparisons.push_back(
          {std::string(t[1].text), std::string(t[2].text), incommensurability_verdict(x, resolve(t[2], n))});
    } else {
      throw ParseError(n, t[0].column, "unknown keyword '" + std::string(kw) + "'");
    }
  }

  ComposeResult take() { return std::move(result_); }

 private:
  ComposeResult result_;
  std::size_t opaque_count_ = 0;
};

}  // namespace

ComposeResult run_compose_script(std::string_view script, std::vector<ArithmeticLinkRecord> table) {
  ComposeRunner runner(std::move(table));
  for (const auto& line : text::tokenized_lines(script)) runner.run(line);
  return runner.take();
}

ComposeResult run_compose_expression(std::string_view expression, std::vector<ArithmeticLinkRecord> table) {
  std::vector<std::string> names;
  std::size_t pos = 0;
  while (true) {
    const std::size_t plus = expression.find('+', pos);
    const auto piece = expression.substr(pos, plus == std::string_view::npos ? std::string_view::npos : plus - pos);
    if (piece.empty() || piece.find_first_of(" \t") != std::string_view::npos)
      throw ParseError(1, pos + 1, "expected link names joined by '+'");
    names.emplace_back(piece);
    if (plus == std::string_view::npos) break;
    pos = plus + 1;
  }
  ComposeResult out;
  out.table = std::move(table);
  BeltedManifold acc = [&] {
    const auto* r = find_link(out.table, names[0]);
    if (!r) throw ParseError(1, 1, "unknown link '" + names[0] + "'");
    return BeltedManifold::from_link(*r);
  }();
  out.entries.push_back({"%1", acc});
  std::size_t column = names[0].size() + 2;
  for (std::size_t i = 1; i < names.size(); ++i) {
    const auto* r = find_link(out.table, names[i]);
    if (!r) throw ParseError(1, column, "unknown link '" + names[i] + "'");
    acc = belted_sum(acc, BeltedManifold::from_link(*r));
    out.entries.push_back({"%" + std::to_string(i + 1), acc});
    column += names[i].size() + 1;
  }
  return out;
}

}  // namespace hyperarith
