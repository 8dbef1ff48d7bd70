#include <doctest.h>

#include <map>

#include "hyperarith/algebra/multiquadratic.hpp"
#include "hyperarith/core/error.hpp"
#include "hyperarith/linkfields/links.hpp"
#include "support.hpp"

using namespace hyperarith;
using namespace testsupport;

namespace {

/// Rank over GF(2) of the exponent vectors (sign as prime -1) by plain trial division.
std::size_t square_class_rank(const std::vector<long>& ds) {
  std::vector<std::map<long, int>> rows;
  for (long d : ds) {
    std::map<long, int> v;
    if (d < 0) v[-1] = 1;
    long n = d < 0 ? -d : d;
    for (long p = 2; p * p <= n; ++p)
      while (n % p == 0) {
        v[p] ^= 1;
        n /= p;
      }
    if (n > 1) v[n] ^= 1;
    std::erase_if(v, [](const auto& kv) { return kv.second == 0; });
    rows.push_back(v);
  }
  std::size_t rank = 0;
  std::vector<std::map<long, int>> basis;
  for (auto r : rows) {
    for (const auto& b : basis) {
      const long pivot = b.begin()->first;
      if (r.count(pivot))
        for (const auto& [p, e] : b) {
          r[p] ^= e;
          if (!r[p]) r.erase(p);
        }
    }
    if (!r.empty()) {
      basis.push_back(r);
      ++rank;
    }
  }
  return rank;
}

std::vector<long> as_longs(const std::vector<Integer>& v) {
  std::vector<long> out;
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

const std::vector<ArithmeticLinkRecord>& sample_table() {
  static const auto table = parse_link_table(
      "link whitehead disc -1 belts 1\n"
      "link chain3 disc -7 belts 1\n"
      "link fivechain disc -15 belts 2\n"
      "link l2 disc -2 belts 3\n"
      "link l3 disc -3 belts 2\n"
      "link l11 disc -11 belts 2\n"
      "link l6 disc -6 belts 3\n",
      "test");
  return table;
}

}  // namespace

TEST_SUITE("linkfields") {

TEST_CASE("link tables") {
  const auto& t = default_link_table();
  REQUIRE(t.size() == 3);
  CHECK(find_link(t, "chain3")->bianchi_disc == -7);
  CHECK(find_link(t, "fivechain")->belt_count == 2);
  CHECK(find_link(t, "borromean") == nullptr);
  const auto u = parse_link_table("link a disc -5 belts 2 # note\nlink a disc -5 belts 2\n", "user");
  CHECK(u.size() == 1);
  CHECK(u[0].origin == "user");
  CHECK_THROWS_AS(parse_link_table("link a disc 5 belts 1\n", "u"), ParseError);
  CHECK_THROWS_AS(parse_link_table("link a disc -4 belts 1\n", "u"), ParseError);
  CHECK_THROWS_AS(parse_link_table("link a disc -5 belts 0\n", "u"), ParseError);
  CHECK_THROWS_AS(parse_link_table("link a+b disc -5 belts 1\n", "u"), ParseError);
  CHECK_THROWS_AS(parse_link_table("link a disc -5 belts 1\nlink a disc -6 belts 1\n", "u"), ParseError);
  CHECK_THROWS_AS(parse_link_table("knot a disc -5 belts 1\n", "u"), ParseError);
}

TEST_CASE("whitehead and chain3") {
  const auto& t = default_link_table();
  const auto w = BeltedManifold::from_link(*find_link(t, "whitehead"));
  const auto c = BeltedManifold::from_link(*find_link(t, "chain3"));
  const auto s = belted_sum(w, c);
  CHECK(s.remaining_belts() == 0);
  CHECK(s.block_count() == 2);
  CHECK(s.describe() == "(whitehead # chain3)");
  const auto f = invariant_trace_field(s);
  CHECK(f.name() == "Q(i, sqrt(-7))");
  CHECK(f.multiquadratic_degree == 4);
  CHECK(f.exact());
  CHECK(f.degree_lower == 4);
  CHECK(f.degree_upper == 4);
  CHECK_THROWS_AS(belted_sum(s, w), NoBeltAvailable);
  CHECK(invariant_trace_field(belted_sum(w, w)).name() == "Q(i)");
}

TEST_CASE("incommensurability") {
  const auto& t = default_link_table();
  std::vector<BeltedManifold> base;
  for (const auto& r : t) base.push_back(BeltedManifold::from_link(r));
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = 0; j < base.size(); ++j) {
      const auto r = incommensurability_verdict(base[i], base[j]);
      if (i == j) CHECK(r.verdict == LinkVerdict::Unknown);
      else {
        CHECK(r.verdict == LinkVerdict::Incommensurable);
        CHECK(r.reason == "field");
      }
    }
  const auto w = base[0];
  const auto big = belted_sum(BeltedManifold::opaque("alpha", 5, 2), w);
  const auto r = incommensurability_verdict(w, big);
  CHECK(r.verdict == LinkVerdict::Incommensurable);
  CHECK(r.reason == "degree");
  // Overlapping degree windows and one inexact side: no conclusion.
  const auto small = BeltedManifold::opaque("beta", 2, 1);
  CHECK(incommensurability_verdict(small, BeltedManifold::from_link(t[1])).verdict == LinkVerdict::Unknown);
}

TEST_CASE("opaque generators and degree bounds") {
  const auto o = belted_sum(BeltedManifold::opaque("alpha_5", 5, 2), BeltedManifold::from_link(*find_link(default_link_table(), "fivechain")));
  const auto f = invariant_trace_field(o);
  CHECK_FALSE(f.exact());
  CHECK(f.degree_lower == 5);
  CHECK(f.degree_upper == 10);
  CHECK(f.name() == "Q(sqrt(-15), alpha_5)");
  CHECK(o.remaining_belts() == 2);
  CHECK(o.describe() == "([alpha_5, degree 5] # fivechain)");
  const auto twice = belted_sum(o, BeltedManifold::opaque("alpha_5", 5, 1));
  CHECK(invariant_trace_field(twice).opaque.size() == 1);
  CHECK_THROWS(belted_sum(o, BeltedManifold::opaque("alpha_5", 7, 1)));
}

TEST_CASE("degree growth in families") {
  const auto w = BeltedManifold::from_link(default_link_table()[0]);
  const auto c = belted_sum(w, BeltedManifold::from_link(default_link_table()[1]));
  const auto g = family_degree_growth(c, {3, 5, 9});
  CHECK(g.lower_bounds == std::vector<std::size_t>{4, 5, 9});
  CHECK(g.strictly_increasing);
  CHECK(g.unbounded_certified);
  CHECK_FALSE(family_degree_growth(c, {2, 2, 2}).unbounded_certified);
  CHECK_FALSE(family_degree_growth(c, {7}).unbounded_certified);
  CHECK_THROWS(family_degree_growth(c, {}));
  CHECK_THROWS(family_degree_growth(c, {3, 0}));
}

TEST_CASE("compositum degrees match a square-class oracle") {
  const auto& t = sample_table();
  for (int i = 0; i < 200; ++i) {
    const std::size_t k = static_cast<std::size_t>(uniform(2, 5));
    std::vector<long> discs;
    std::vector<BeltedManifold> parts;
    for (std::size_t j = 0; j < k; ++j) {
      const auto& r = t[static_cast<std::size_t>(uniform(0, static_cast<long>(t.size()) - 1))];
      discs.push_back(r.bianchi_disc.get_si());
      parts.push_back(BeltedManifold::from_link(r));
    }
    std::size_t belts = 0;
    for (const auto& p : parts) belts += p.remaining_belts();
    auto left = parts[0];
    bool ok = true;
    try {
      for (std::size_t j = 1; j < k; ++j) left = belted_sum(left, parts[j]);
    } catch (const NoBeltAvailable&) {
      ok = false;
    }
    if (!ok) continue;
    const auto f = invariant_trace_field(left);
    CHECK(f.multiquadratic_degree == (std::size_t{1} << square_class_rank(discs)));
    CHECK(square_class_rank(as_longs(f.generators)) == f.generators.size());
    CHECK(left.remaining_belts() == belts - 2 * (k - 1));
    CHECK(left.block_count() == k);
    // Reversed order gives the same field whenever it is buildable.
    try {
      auto right = parts[k - 1];
      for (std::size_t j = k - 1; j-- > 0;) right = belted_sum(right, parts[j]);
      CHECK(same_square_class_span(invariant_trace_field(right).generators, f.generators));
      CHECK(right.remaining_belts() == left.remaining_belts());
    } catch (const NoBeltAvailable&) {
    }
  }
}

TEST_CASE("sums are commutative and associative on fields") {
  const auto& t = sample_table();
  const auto a = BeltedManifold::from_link(t[3]);
  const auto b = BeltedManifold::from_link(t[5]);
  const auto c = BeltedManifold::from_link(t[6]);
  const auto ab = invariant_trace_field(belted_sum(a, b));
  const auto ba = invariant_trace_field(belted_sum(b, a));
  CHECK(ab.generators == ba.generators);
  const auto l = belted_sum(belted_sum(a, b), c);
  const auto r = belted_sum(a, belted_sum(b, c));
  CHECK(invariant_trace_field(l).generators == invariant_trace_field(r).generators);
  CHECK(l.remaining_belts() == r.remaining_belts());
  CHECK(l.describe() == "((l2 # l11) # l6)");
  CHECK(r.describe() == "(l2 # (l11 # l6))");
}

TEST_CASE("compose scripts") {
  const auto res = run_compose_script(
      "sum whitehead chain3\n"
      "opaque 5 belts 2 name alpha_5\n"
      "sum % fivechain\n"
      "family %1 3 5\n"
      "compare %1 %3\n",
      default_link_table());
  REQUIRE(res.entries.size() == 3);
  CHECK(res.entries[1].label == "%2");
  CHECK(invariant_trace_field(res.last()).name() == "Q(sqrt(-15), alpha_5)");
  REQUIRE(res.comparisons.size() == 1);
  CHECK(res.comparisons[0].report.verdict == LinkVerdict::Incommensurable);
  REQUIRE(res.families.size() == 1);
  CHECK(res.families[0].growth.lower_bounds == std::vector<std::size_t>{4, 5});

  const auto e = run_compose_expression("whitehead+fivechain+chain3", default_link_table());
  CHECK(e.entries.size() == 3);
  CHECK(e.last().describe() == "((whitehead # fivechain) # chain3)");
  CHECK(invariant_trace_field(e.last()).multiquadratic_degree == 8);

  auto column_of = [](const std::string& s) -> std::size_t {
    try {
      run_compose_script(s, default_link_table());
    } catch (const ParseError& err) {
      return err.column();
    }
    return 0;
  };
  CHECK(column_of("sum foo bar\n") == 5);
  CHECK(column_of("sum whitehead bar\n") == 15);
  CHECK(column_of("sum whitehead %4\n") == 15);
  CHECK(column_of("opaque x\n") == 8);
  CHECK(column_of("frobnicate\n") == 1);
  CHECK_THROWS_AS(run_compose_script("sum whitehead chain3\nsum % whitehead\n", default_link_table()),
                  NoBeltAvailable);
  CHECK_THROWS_AS(run_compose_expression("whitehead+nothing", default_link_table()), ParseError);
}

}
