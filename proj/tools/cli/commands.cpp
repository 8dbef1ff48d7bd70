#include "commands.hpp"

#include <omp.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "hyperarith/core/error.hpp"
#include "hyperarith/core/parallel.hpp"
#include "hyperarith/coxeter/vinberg.hpp"
#include "hyperarith/hybrid/glue.hpp"
#include "hyperarith/io/formats.hpp"
#include "hyperarith/linkfields/links.hpp"

namespace hyperarith::cli {

namespace fs = std::filesystem;

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

std::string yes_no(bool b) { return b ? "Yes" : "No"; }

namespace {

struct Input {
  std::string name;
  std::string content;
};

std::optional<fs::path> locate(const std::string& name, const Options& opt) {
  if (fs::is_regular_file(name)) return fs::path(name);
  if (!opt.data_dir.empty() && fs::path(name).is_relative()) {
    const auto p = fs::path(opt.data_dir) / name;
    if (fs::is_regular_file(p)) return p;
  }
  return std::nullopt;
}

Input read_input(const std::string& name, const Options& opt) {
  const auto path = locate(name, opt);
  if (!path) throw Error("cannot open '" + name + "'");
  std::ifstream in(*path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (!in && !in.eof()) throw Error("cannot read '" + name + "'");
  return {name, ss.str()};
}

Json digest(const Input& in) {
  return {{"name", in.name}, {"bytes", in.content.size()}, {"fnv1a64", fnv1a_hex(in.content)}};
}

Json provenance() {
  return {{"tool", "hyperarith"}, {"version", HYPERARITH_VERSION}, {"arithmetic", "exact (GMP rationals)"}};
}


/// Rethrows with the input name attached; keeps the error class.
template <class F>
auto with_name(const std::string& name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(name + ": " + e.what());
  }
}

void put(Json& j, const std::string& key, const FieldElement& x, const Options& opt) {
  j[key] = x.to_string();
  if (opt.approx) j[key + "_approx"] = x.field()->is_rationals() ? x.decimal(0) : x.decimal(x.field()->chosen_embedding());
}

Json field_json(const FieldPtr& k) {
  return {{"polynomial", k->defining_polynomial().to_string("t")},
          {"degree", k->degree()},
          {"embedding", k->chosen_embedding()}};
}

Json signature_json(const Signature& s) {
  return {{"positive", s.positive}, {"negative", s.negative}, {"zero", s.zero}};
}

std::string yes_no_unknown(CommensurabilityStatus s) {
  switch (s) {
    case CommensurabilityStatus::Commensurable: return "Yes";
    case CommensurabilityStatus::NotCommensurable: return "No";
    default: return "Unknown";
  }
}

struct Item {
  Json json;
  std::string text;
  bool negative = false;
};

/// Runs f on every input, concurrently when jobs > 1; results keep input order.
template <class F>
std::vector<Item> batch(std::size_t n, const Options& opt, F&& f) {
  std::vector<Item> out(n);
  const int saved = omp_get_max_threads();
  if (opt.jobs > 1) omp_set_num_threads(static_cast<int>(opt.jobs));
  try {
    for_each_index(n, opt.jobs > 1 ? Execution::Parallel : Execution::Serial,
                   [&](std::size_t i) { out[i] = f(i); });
  } catch (...) {
    omp_set_num_threads(saved);
    throw;
  }
  omp_set_num_threads(saved);
  return out;
}

Outcome assemble(const std::string& command, Json inputs, std::vector<Item> items) {
  Outcome o;
  Json verdicts = Json::array();
  for (auto& it : items) {
    verdicts.push_back(std::move(it.json));
    o.text += it.text;
    o.negative = o.negative || it.negative;
  }
  o.report = {{"command", command}, {"inputs", std::move(inputs)}, {"verdicts", std::move(verdicts)},
              {"provenance", provenance()}};
  return o;
}

QuadraticSpace form_argument(const std::string& arg, const Options& opt, Json& inputs) {
  if (arg.rfind("diag(", 0) == 0) {
    inputs.push_back({{"name", arg}, {"inline", true}});
    return with_name(arg, [&] { return parse_inline_form(arg); });
  }
  const auto in = read_input(arg, opt);
  inputs.push_back(digest(in));
  return with_name(arg, [&] { return parse_form(in.content); });
}

}  // namespace

Outcome form_check(const std::vector<std::string>& files, const Options& opt) {
  std::vector<Input> ins;
  Json inputs = Json::array();
  for (const auto& f : files) {
    ins.push_back(read_input(f, opt));
    inputs.push_back(digest(ins.back()));
  }
  auto items = batch(ins.size(), opt, [&](std::size_t i) {
    const auto& in = ins[i];
    return with_name(in.name, [&] {
      const auto q = parse_form(in.content);
      const auto rep = is_admissible(q);
      Item it;
      it.json = {{"input", in.name}, {"field", field_json(q.field())}, {"rank", q.rank()},
                 {"admissible", yes_no(rep.admissible)}};
      Json sigs = Json::array();
      for (std::size_t j = 0; j < rep.signature_at_each_embedding.size(); ++j) {
        auto s = signature_json(rep.signature_at_each_embedding[j]);
        s["embedding"] = j;
        sigs.push_back(s);
      }
      it.json["signatures"] = sigs;
      it.json["failing_embedding"] = rep.failing_embedding ? Json(*rep.failing_embedding) : Json(nullptr);
      it.negative = !rep.admissible;
      std::ostringstream os;
      os << in.name << ": admissible " << yes_no(rep.admissible);
      const auto& s = rep.signature_at_each_embedding.at(q.field()->chosen_embedding());
      os << " (signature (" << s.positive << "," << s.negative << "," << s.zero << ") at embedding "
         << q.field()->chosen_embedding();
      if (rep.failing_embedding) os << "; fails at embedding " << *rep.failing_embedding;
      os << ")\n";
      it.text = os.str();
      return it;
    });
  });
  return assemble("form check", std::move(inputs), std::move(items));
}

Outcome form_commensurable(const std::string& first, const std::string& second, const Options& opt) {
  Json inputs = Json::array();
  const auto q1 = form_argument(first, opt, inputs);
  const auto q2 = form_argument(second, opt, inputs);
  const auto v = commensurable(q1, q2, opt.jobs > 1 ? Execution::Parallel : Execution::Serial);
  Item it;
  it.json = {{"commensurable", yes_no_unknown(v.status)}, {"status", to_string(v.status)}, {"reason", v.reason}};
  const char* rel[] = {"Isomorphic", "NotIsomorphic", "Unknown"};
  it.json["fields"] = {{"relation", rel[static_cast<int>(v.fields.relation)]}, {"reason", v.fields.reason}};
  std::ostringstream os;
  os << to_string(v.status);
  if (v.similarity) {
    Json s = {{"status", to_string(v.similarity->status)}, {"reason", v.similarity->reason},
              {"notes", v.similarity->notes}};
    if (v.similarity->lambda) put(s, "lambda", *v.similarity->lambda, opt);
    else s["lambda"] = nullptr;
    it.json["similarity"] = s;
    if (v.similarity->lambda) os << " (lambda = " << v.similarity->lambda->to_string() << ")";
  } else {
    it.json["similarity"] = nullptr;
  }
  if (!v.reason.empty()) os << " [" << v.reason << "]";
  os << "\n";
  it.text = os.str();
  it.negative = v.status == CommensurabilityStatus::NotCommensurable;
  std::vector<Item> items;
  items.push_back(std::move(it));
  return assemble("form commensurable", std::move(inputs), std::move(items));
}

Outcome hybrid_verify(const std::vector<std::string>& files, const Options& opt) {
  std::vector<Input> ins;
  Json inputs = Json::array();
  for (const auto& f : files) {
    ins.push_back(read_input(f, opt));
    inputs.push_back(digest(ins.back()));
  }
  auto items = batch(ins.size(), opt, [&](std::size_t i) {
    const auto& in = ins[i];
    return with_name(in.name, [&] {
      const auto c = parse_complex(in.content);
      const auto r = finiteness_verdict(c, Execution::Serial);
      Item it;
      const std::string met = r.verdict == FinitenessStatus::HypothesesMet      ? "Yes"
                              : r.verdict == FinitenessStatus::HypothesesNotMet ? "No"
                                                                                : "Unknown";
      it.json = {{"input", in.name},
                 {"pattern", to_string(c.pattern)},
                 {"field", field_json(c.blocks.front().alpha().field())},
                 {"verdict", to_string(r.verdict)},
                 {"hypotheses_met", met},
                 {"notes", r.notes}};
      Json pairs = Json::array();
      std::ostringstream os;
      os << in.name << ": " << to_string(r.verdict) << " (pattern " << to_string(c.pattern) << ")\n";
      for (const auto& p : r.pairs) {
        Json j = {{"blocks", {c.blocks[p.first].label(), c.blocks[p.second].label()}},
                  {"similarity", to_string(p.similarity)},
                  {"similar", yes_no_unknown(p.similarity)},
                  {"ratio_square", yes_no(p.ratio_root.has_value())},
                  {"forced_orthogonal", yes_no(p.forced_orthogonal)}};
        put(j, "ratio", p.ratio, opt);
        if (p.ratio_root) put(j, "ratio_root", *p.ratio_root, opt);
        else j["ratio_root"] = nullptr;
        pairs.push_back(j);
        os << "  " << c.blocks[p.first].label() << " -- " << c.blocks[p.second].label() << ": "
           << to_string(p.similarity) << ", ratio " << p.ratio.to_string() << " square "
           << yes_no(p.ratio_root.has_value()) << ", forced orthogonal " << yes_no(p.forced_orthogonal) << "\n";
      }
      for (const auto& n : r.notes) os << "  note: " << n << "\n";
      it.json["pairs"] = pairs;
      it.text = os.str();
      it.negative = r.verdict == FinitenessStatus::HypothesesNotMet;
      return it;
    });
  });
  return assemble("hybrid verify", std::move(inputs), std::move(items));
}

Outcome hybrid_angle(const std::string& file, const std::string& e_text, const std::string& z_text,
                     const Options& opt) {
  const auto in = read_input(file, opt);
  Json inputs = Json::array({digest(in), {{"name", "--e"}, {"value", e_text}}, {{"name", "--z"}, {"value", z_text}}});
  Item it = with_name(in.name, [&] {
    const auto q = parse_form(in.content);
    const auto k = q.field();
    const auto e = parse_vector(e_text, k);
    const auto zs = parse_vectors(z_text, k);
    for (const auto& v : zs)
      if (v.size() != q.rank()) throw DimensionMismatch("--z vector length does not match the form");
    if (e.size() != q.rank()) throw DimensionMismatch("--e vector length does not match the form");
    const auto z = Subspace<FieldElement>::span(zs, q.rank(), FieldElement(k, Rational(0)));
    const auto c = angle_with_hypersurface(q, e, z);
    Item r;
    r.json = {{"input", in.name}, {"field", field_json(k)}, {"z_dimension", z.dim()},
              {"orthogonal", yes_no(c.is_zero())}};
    put(r.json, "cos2", c, opt);
    r.text = "cos^2 = " + c.to_string() + (c.is_zero() ? " (orthogonal)" : "") + "\n";
    return r;
  });
  std::vector<Item> items;
  items.push_back(std::move(it));
  return assemble("hybrid angle", std::move(inputs), std::move(items));
}

Outcome coxeter_analyze(const std::vector<std::string>& files, const Options& opt) {
  std::vector<Input> ins;
  Json inputs = Json::array();
  for (const auto& f : files) {
    ins.push_back(read_input(f, opt));
    inputs.push_back(digest(ins.back()));
  }
  const auto& entry = coxeter_entry_field();
  auto items = batch(ins.size(), opt, [&](std::size_t i) {
    const auto& in = ins[i];
    return with_name(in.name, [&] {
      const auto d = parse_diagram(in.content);
      const auto cl = classify(d);
      Item it;
      it.json = {{"input", in.name},
                 {"rank", d.rank()},
                 {"classification", cl.describe()},
                 {"signature", signature_json(cl.signature)},
                 {"volume_type", cl.volume ? Json(to_string(*cl.volume)) : Json(nullptr)}};
      std::ostringstream os;
      os << in.name << ": " << cl.describe();
      if (cl.volume) os << ", " << to_string(*cl.volume);
      os << "\n";
      if (cl.type != DiagramType::Hyperbolic) {
        it.json["arithmeticity"] = nullptr;
        it.json["splittability"] = nullptr;
        it.negative = true;
        it.text = os.str();
        return it;
      }
      const auto a = vinberg_arithmeticity(d);
      Json cycles = Json::array();
      for (const auto& c : a.cycles) {
        std::vector<std::size_t> vs;
        for (auto v : c.vertices) vs.push_back(v + 1);
        Json cj = {{"vertices", vs}, {"value", entry.render(c.value)}, {"integral", yes_no(c.integral)}};
        if (opt.approx) cj["value_approx"] = c.value.decimal(c.value.field()->chosen_embedding());
        cycles.push_back(cj);
      }
      const bool arith = a.verdict == ArithmeticityVerdict::Arithmetic;
      const bool quasi = arith || a.verdict == ArithmeticityVerdict::QuasiArithmeticOnly;
      it.json["arithmeticity"] = {{"verdict", to_string(a.verdict)},
                                  {"arithmetic", yes_no(arith)},
                                  {"quasi_arithmetic", yes_no(quasi)},
                                  {"field", a.field_name()},
                                  {"field_degree", a.cycle_field_degree},
                                  {"totally_real", yes_no(a.totally_real)},
                                  {"cycles_integral", yes_no(a.all_cycles_integral)},
                                  {"conjugates_semidefinite", yes_no(a.conjugates_semidefinite)},
                                  {"cycles", cycles},
                                  {"certificate", a.certificate}};
      const auto s = unsplittable_check(d, cl.n, Execution::Serial);
      Json cands = Json::array();
      for (const auto& c : s.candidates) {
        std::vector<std::size_t> vs;
        for (auto v : c.vertices) vs.push_back(v + 1);
        cands.push_back(vs);
      }
      it.json["splittability"] = {{"status", s.certified_unsplittable ? "UnsplittableCertified" : "PossiblySplittable"},
                                  {"unsplittable", s.certified_unsplittable ? "Yes" : "Unknown"},
                                  {"reason", s.reason},
                                  {"candidates", cands}};
      os << "  arithmeticity: " << to_string(a.verdict) << " (arithmetic " << yes_no(arith) << ", quasi-arithmetic "
         << yes_no(quasi) << "), cycle field " << a.field_name() << "\n";
      if (!a.certificate.empty()) os << "  " << a.certificate << "\n";
      os << "  splittability: "
         << (s.certified_unsplittable ? "UnsplittableCertified(\"" + s.reason + "\")" : "PossiblySplittable");
      if (!s.certified_unsplittable) os << " (" << s.candidates.size() << " candidate subgroups)";
      os << "\n";
      it.text = os.str();
      return it;
    });
  });
  return assemble("coxeter analyze", std::move(inputs), std::move(items));
}

namespace {

Json trace_field_json(const BeltedManifold& m) {
  const auto f = invariant_trace_field(m);
  std::vector<std::string> gens;
  for (const auto& g : f.generators) gens.push_back(g.get_str());
  Json j = {{"name", f.name()}, {"generators", gens}};
  if (f.exact()) {
    j["degree"] = f.degree_upper;
  } else {
    j["degree_bounds"] = {f.degree_lower, f.degree_upper};
    Json op = Json::array();
    for (const auto& g : f.opaque) op.push_back({{"name", g.name}, {"degree", g.degree}});
    j["opaque"] = op;
  }
  return j;
}

std::string field_text(const BeltedManifold& m) {
  const auto f = invariant_trace_field(m);
  if (f.exact()) return f.name() + ", degree " + std::to_string(f.degree_upper);
  return f.name() + ", degree in [" + std::to_string(f.degree_lower) + ", " + std::to_string(f.degree_upper) + "]";
}

}  // namespace

Outcome links_compose(const std::vector<std::string>& args, const std::string& table_file, const Options& opt) {
  Json inputs = Json::array();
  std::vector<ArithmeticLinkRecord> table;
  if (!table_file.empty()) {
    const auto t = read_input(table_file, opt);
    inputs.push_back(digest(t));
    table = with_name(t.name, [&] { return parse_link_table(t.content, "user:" + t.name); });
  } else if (locate("links.txt", opt) && !opt.data_dir.empty()) {
    const auto t = read_input("links.txt", opt);
    inputs.push_back(digest(t));
    table = with_name(t.name, [&] { return parse_link_table(t.content, "bundled"); });
  } else {
    table = default_link_table();
  }
  static const std::regex expression(R"([A-Za-z0-9_.-]+(\+[A-Za-z0-9_.-]+)*)");
  struct Arg {
    std::string name;
    std::optional<Input> script;
  };
  std::vector<Arg> parsed;
  for (const auto& a : args) {
    if (locate(a, opt)) {
      parsed.push_back({a, read_input(a, opt)});
      inputs.push_back(digest(*parsed.back().script));
    } else if (std::regex_match(a, expression)) {
      parsed.push_back({a, std::nullopt});
      inputs.push_back({{"name", a}, {"inline", true}});
    } else {
      throw Error("cannot open '" + a + "' and it is not a link expression");
    }
  }
  auto items = batch(parsed.size(), opt, [&](std::size_t i) {
    const auto& a = parsed[i];
    return with_name(a.name, [&] {
      const auto r = a.script ? run_compose_script(a.script->content, table) : run_compose_expression(a.name, table);
      Item it;
      it.json = {{"input", a.name}, {"kind", a.script ? "script" : "expression"}};
      std::ostringstream os;
      Json steps = Json::array();
      for (const auto& e : r.entries)
        steps.push_back({{"label", e.label},
                         {"composition", e.manifold.describe()},
                         {"field", trace_field_json(e.manifold)},
                         {"belts", e.manifold.remaining_belts()}});
      it.json["steps"] = steps;
      if (!r.entries.empty()) {
        it.json["field"] = trace_field_json(r.last());
        it.json["belts"] = r.last().remaining_belts();
        it.json["composition"] = r.last().describe();
        os << a.name << ": " << r.last().describe() << " -> " << field_text(r.last()) << ", belts "
           << r.last().remaining_belts() << "\n";
      } else {
        it.json["field"] = nullptr;
        it.json["belts"] = nullptr;
        it.json["composition"] = nullptr;
        os << a.name << ":\n";
      }
      Json cmp = Json::array();
      for (const auto& c : r.comparisons) {
        const bool inc = c.report.verdict == LinkVerdict::Incommensurable;
        cmp.push_back({{"first", c.first},
                       {"second", c.second},
                       {"verdict", to_string(c.report.verdict)},
                       {"incommensurable", inc ? "Yes" : "Unknown"},
                       {"reason", c.report.reason}});
        os << "  compare " << c.first << " " << c.second << ": " << to_string(c.report.verdict);
        if (inc) os << "(" << c.report.reason << ")";
        os << "\n";
      }
      it.json["verdicts"] = cmp;
      Json fams = Json::array();
      for (const auto& f : r.families) {
        fams.push_back({{"base", f.base},
                        {"degrees", f.degrees},
                        {"lower_bounds", f.growth.lower_bounds},
                        {"strictly_increasing", yes_no(f.growth.strictly_increasing)},
                        {"unbounded_certified", f.growth.unbounded_certified ? "Yes" : "Unknown"}});
        os << "  family " << f.base << ": lower bounds";
        for (auto b : f.growth.lower_bounds) os << " " << b;
        os << (f.growth.unbounded_certified ? " (strictly increasing: degree growth certified)" : " (not certified)")
           << "\n";
        it.negative = it.negative || !f.growth.unbounded_certified;
      }
      it.json["families"] = fams;
      Json links = Json::array();
      for (const auto& l : r.table)
        links.push_back({{"name", l.name}, {"disc", l.bianchi_disc.get_str()}, {"belts", l.belt_count}, {"origin", l.origin}});
      it.json["links"] = links;
      it.text = os.str();
      return it;
    });
  });
  return assemble("links compose", std::move(inputs), std::move(items));
}

}  // namespace hyperarith::cli
