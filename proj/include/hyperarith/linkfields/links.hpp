#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperarith/algebra/rational.hpp"

namespace hyperarith {

/// A link whose complement is commensurable with PSL2(O_d), d < 0.
struct ArithmeticLinkRecord {
  std::string name;
  Integer bianchi_disc;
  std::size_t belt_count = 1;
  /// "builtin", a file path, or "script"; anything but builtin is user data.
  std::string origin = "builtin";
};

/// Lines `link <name> disc <d> belts <k>`. Throws ParseError.
std::vector<ArithmeticLinkRecord> parse_link_table(std::string_view text, const std::string& origin);

/// whitehead (-1, 1 belt), chain3 (-7, 1 belt), fivechain (-15, 2 belts).
const std::vector<ArithmeticLinkRecord>& default_link_table();

const ArithmeticLinkRecord* find_link(const std::vector<ArithmeticLinkRecord>& table, std::string_view name);

/// Trace-field generator known only through its degree over Q.
struct OpaqueGenerator {
  std::string name;
  std::size_t degree = 1;

  bool operator==(const OpaqueGenerator&) const = default;
};

class BeltedManifold {
 public:
  struct Node {
    std::string label;
    std::shared_ptr<const Node> left, right;
  };

  static BeltedManifold from_link(const ArithmeticLinkRecord& record);
  /// A surgered block whose trace field is Q(name) of the given degree.
  static BeltedManifold opaque(std::string name, std::size_t degree, std::size_t belts = 1);

  /// Square-class independent, canonical order.
  const std::vector<Integer>& field_generators() const { return generators_; }
  /// Sorted by name, deduplicated.
  const std::vector<OpaqueGenerator>& opaque_generators() const { return opaque_; }
  std::size_t remaining_belts() const { return belts_; }
  std::size_t block_count() const { return blocks_; }
  const std::shared_ptr<const Node>& tree() const { return tree_; }
  /// "(whitehead # chain3)".
  std::string describe() const;

  friend BeltedManifold belted_sum(const BeltedManifold& a, const BeltedManifold& b);

 private:
  std::vector<Integer> generators_;
  std::vector<OpaqueGenerator> opaque_;
  std::size_t belts_ = 0;
  std::size_t blocks_ = 1;
  std::shared_ptr<const Node> tree_;
};

/// Consumes one belt from each side. Throws NoBeltAvailable.
BeltedManifold belted_sum(const BeltedManifold& a, const BeltedManifold& b);

struct TraceFieldDescriptor {
  std::vector<Integer> generators;
  std::vector<OpaqueGenerator> opaque;
  /// 2^|generators|.
  std::size_t multiquadratic_degree = 1;
  std::size_t degree_lower = 1;
  std::size_t degree_upper = 1;

  bool exact() const { return opaque.empty(); }
  /// "Q(i, sqrt(-7))".
  std::string name() const;
};

/// Compositum bookkeeping; the multiquadratic part is realized exactly.
TraceFieldDescriptor invariant_trace_field(const BeltedManifold& m);

enum class LinkVerdict { Incommensurable, Unknown };
std::string to_string(LinkVerdict v);

struct IncommensurabilityReport {
  LinkVerdict verdict = LinkVerdict::Unknown;
  /// "degree", "field" or empty.
  std::string reason;
};

IncommensurabilityReport incommensurability_verdict(const BeltedManifold& a, const BeltedManifold& b);

struct DegreeGrowth {
  std::vector<std::size_t> lower_bounds;
  bool strictly_increasing = false;
  /// Strictly increasing over at least two members.
  bool unbounded_certified = false;
};

/// Lower bounds on [k_r : Q] for k_r = k(base) . Q(alpha_r), deg alpha_r = d_r.
DegreeGrowth family_degree_growth(const BeltedManifold& base, const std::vector<std::size_t>& opaque_degrees);

struct ComposeStatement {
  std::size_t line = 0;
  std::string text;
};

struct ComposeResult {
  struct Entry {
    std::string label;  // "%1", "%2", ...
    BeltedManifold manifold;
  };
  struct Comparison {
    std::string first, second;
    IncommensurabilityReport report;
  };
  struct Family {
    std::string base;
    std::vector<std::size_t> degrees;
    DegreeGrowth growth;
  };

  std::vector<ArithmeticLinkRecord> table;
  std::vector<Entry> entries;
  std::vector<Comparison> comparisons;
  std::vector<Family> families;

  const BeltedManifold& last() const;
};

/// Script lines:
///   link <name> disc <d> belts <k>
///   sum <x> <y>              x, y: link name, %k, or % (last result)
///   opaque <degree> [belts <k>] [name <s>]
///   family <x> d1 d2 ...
///   compare <x> <y>
/// Throws ParseError; NoBeltAvailable propagates.
ComposeResult run_compose_script(std::string_view script, std::vector<ArithmeticLinkRecord> table);

/// "whitehead+chain3+..." as a left-nested chain of sums.
ComposeResult run_compose_expression(std::string_view expression, std::vector<ArithmeticLinkRecord> table);

}  // namespace hyperarith
