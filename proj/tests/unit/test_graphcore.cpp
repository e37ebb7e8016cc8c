#include <map>
#include <numeric>
#include <random>

#include "doctest.h"
#include "ncg/classes.hpp"
#include "ncg/errors.hpp"
#include "ncg/families.hpp"
#include "ncg/graph.hpp"
#include "ncg/report.hpp"
#include "ncg/subgroups.hpp"
#include "support/perm_oracles.hpp"

using namespace ncg;
using namespace ncg::graph;
using perm::make_group;
using perm::parse_group_spec;

namespace {

PermGroup named(const char* text) { return make_group(parse_group_spec(text)); }

PermGroup from_cycles(std::size_t degree, std::vector<const char*> gens, const char* name) {
  std::vector<Permutation> g;
  for (auto s : gens) g.push_back(Permutation::parse(degree, s));
  return PermGroup(degree, std::move(g), name);
}

// Element graph built from scratch with naive closure; -1 marks infinity.
struct BruteGraph {
  std::vector<oracle::Img> verts;
  std::vector<std::vector<char>> adj;
  int diameter = -1;
  bool connected = false;
  std::size_t isolated = 0;
};

BruteGraph brute_graph(const PermGroup& g, GraphKind kind) {
  std::vector<oracle::Img> gens;
  for (const auto& s : g.generators()) gens.push_back(s.images());
  const auto all = oracle::closure(g.degree(), gens);
  BruteGraph b;
  for (const auto& x : all) {
    bool central = true;
    for (const auto& s : gens) central = central && oracle::compose(x, s) == oracle::compose(s, x);
    const bool identity = x == oracle::compose(x, x);
    if (kind == GraphKind::nc ? !central : !identity) b.verts.push_back(x);
  }
  const std::size_t n = b.verts.size();
  b.adj.assign(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& x = b.verts[i];
      const auto& y = b.verts[j];
      if (kind == GraphKind::nc && oracle::compose(x, y) == oracle::compose(y, x)) continue;
      if (oracle::closure(g.degree(), {x, y}).size() == all.size()) continue;
      b.adj[i][j] = b.adj[j][i] = 1;
    }
  b.connected = true;
  int diam = 0;
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<int> d(n, -1);
    d[s] = 0;
    std::vector<std::size_t> queue{s};
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (std::size_t w = 0; w < n; ++w)
        if (b.adj[queue[h]][w] && d[w] < 0) {
          d[w] = d[queue[h]] + 1;
          queue.push_back(w);
        }
    if (queue.size() < n) b.connected = false;
    if (queue.size() == 1) ++b.isolated;
    for (int v : d) diam = std::max(diam, v);
  }
  if (b.connected) b.diameter = diam;
  return b;
}

int reported(const DiameterReport& r) { return r.diameter ? static_cast<int>(*r.diameter) : -1; }

// A cyclic subgroup of order m has phi(m) generators.
std::uint64_t count_cyclic_subgroups(const PermGroup& g) {
  std::uint64_t n = 0;
  for (const auto& c : perm::conjugacy_classes(g).classes) {
    if (c.element_order == 1) continue;
    std::uint64_t phi = 0;
    for (std::uint64_t k = 1; k <= c.element_order; ++k) phi += std::gcd(k, c.element_order) == 1;
    n += c.size / phi;
  }
  return n;
}

}  // namespace

TEST_CASE("graph kind names") {
  CHECK(parse_graph_kind("nc") == GraphKind::nc);
  CHECK(parse_graph_kind("nongen") == GraphKind::nongen);
  CHECK(parse_graph_kind("intersection") == GraphKind::intersection);
  CHECK_THROWS_AS(parse_graph_kind("commuting"), ParseError);
  CHECK(to_string(GraphKind::nongen) == "nongen");
}

TEST_CASE("adjacency predicates") {
  const auto a5 = named("alt:5");
  const auto x = Permutation::parse(5, "(0 1 2)");
  const auto y = Permutation::parse(5, "(0 1 3)");
  CHECK(perm::closure_order(5, {x, y}) == 12);
  CHECK(nc_adjacent(a5, x, y));
  CHECK(!nc_adjacent(a5, x, x * x));
  CHECK(nongen_adjacent(a5, x, x));
  CHECK(nongen_adjacent(a5, x, y));
  const auto s = Permutation::parse(5, "(0 1 2)");
  const auto t = Permutation::parse(5, "(0 1 2 3 4)");
  CHECK(perm::closure_order(5, {s, t}) == 60);
  CHECK(!nongen_adjacent(a5, s, t));
  CHECK(!nc_adjacent(a5, s, t));
  CHECK_THROWS_AS(nc_adjacent(a5, a5.identity(), x), std::invalid_argument);
  CHECK_THROWS_AS(nongen_adjacent(a5, x, Permutation::parse(5, "(0 1)")), std::invalid_argument);

  const auto c6 = from_cycles(6, {"(0 1 2 3 4 5)"}, "C6");
  CHECK(!nongen_adjacent(c6, Permutation::parse(6, "(0 1 2 3 4 5)"), Permutation::parse(6, "(0 1 2 3 4 5)")));
  CHECK_THROWS_AS(nc_adjacent(c6, Permutation::parse(6, "(0 1 2 3 4 5)"), Permutation::parse(6, "(0 2 4)(1 3 5)")),
                  std::invalid_argument);
}

TEST_CASE("generation test agrees with closure") {
  std::mt19937_64 rng(7);
  for (const char* spec : {"alt:6", "psl:2:7", "sym:5", "mathieu:11"}) {
    const auto g = named(spec);
    const GenerationTest gen(g);
    const auto elems = perm::group_elements(g);
    for (int i = 0; i < 200; ++i) {
      const auto& x = elems[rng() % elems.size()];
      const auto& y = elems[rng() % elems.size()];
      bool full = false;
      try {
        full = perm::closure_order(g.degree(), {x, y}, g.order() - 1) == g.order();
      } catch (const CapExceeded&) {
        full = true;
      }
      CHECK(gen.generates(x, y) == full);
    }
  }
}

TEST_CASE("quotient vertices are the cyclic subgroups") {
  const auto a5 = named("alt:5");
  QuotientGraph q(a5, GraphKind::nc);
  CHECK(q.vertex_count() == 31);
  CHECK(q.element_count() == 59);
  std::map<std::uint64_t, int> by_order;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) ++by_order[q.element_order(v)];
  CHECK(by_order == std::map<std::uint64_t, int>{{2, 15}, {3, 10}, {5, 6}});

  // PSL(2,7): 21 involutions, 28 subgroups of order 3, 21 of order 4, 8 of order 7.
  QuotientGraph p(named("psl:2:7"), GraphKind::nc);
  CHECK(p.vertex_count() == 78);
  CHECK(count_cyclic_subgroups(p.group()) == 78);
  std::uint64_t gens = 0;
  for (std::size_t v = 0; v < p.vertex_count(); ++v) gens += p.vertex_size(v);
  CHECK(gens == 167);

  for (const auto* spec : {"alt:6", "psl:2:11", "sym:5"}) {
    QuotientGraph g(named(spec), GraphKind::nc);
    std::uint64_t covered = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      CHECK(!g.adjacent(v, v));
      CHECK(!g.self_adjacent(v));
      const auto elems = g.vertex_elements(v);
      covered += elems.size();
      for (const auto& e : elems) CHECK(g.vertex_of(e) == v);
    }
    CHECK(covered == g.element_count());
  }
}

TEST_CASE("centre is excluded from nc") {
  const auto d8 = from_cycles(4, {"(0 1 2 3)", "(0 2)"}, "D8");
  QuotientGraph q(d8, GraphKind::nc);
  CHECK(q.center_order() == 2);
  CHECK(q.element_count() == 6);
  CHECK(!q.vertex_of(Permutation::parse(4, "(0 2)(1 3)")));
  QuotientGraph n(d8, GraphKind::nongen);
  CHECK(n.element_count() == 7);
}

TEST_CASE("diameters agree with a brute-force element graph") {
  struct Case {
    PermGroup g;
    GraphKind kind;
  };
  std::vector<Case> cases;
  for (auto kind : {GraphKind::nc, GraphKind::nongen}) {
    cases.push_back({named("alt:5"), kind});
    cases.push_back({named("sym:4"), kind});
    cases.push_back({named("sym:5"), kind});
    cases.push_back({named("psl:2:7"), kind});
    cases.push_back({named("alt:4"), kind});
    cases.push_back({named("sym:3"), kind});
    cases.push_back({from_cycles(4, {"(0 1 2 3)", "(0 2)"}, "D8"), kind});
    cases.push_back({from_cycles(5, {"(0 1 2 3 4)", "(1 4)(2 3)"}, "D10"), kind});
  }
  for (const auto& c : cases) {
    CAPTURE(c.g.name());
    CAPTURE(to_string(c.kind));
    const auto b = brute_graph(c.g, c.kind);
    QuotientGraph q(c.g, c.kind);
    CHECK(q.element_count() == b.verts.size());
    CHECK(q.element_edge_count() == [&] {
      std::uint64_t e = 0;
      for (std::size_t i = 0; i < b.verts.size(); ++i)
        for (std::size_t j = i + 1; j < b.verts.size(); ++j) e += b.adj[i][j];
      return e;
    }());
    for (bool plan : {true, false}) {
      const auto r = graph_diameter(q, plan);
      CHECK(r.connected == b.connected);
      CHECK(reported(r) == b.diameter);
    }
    std::uint64_t isolated = 0;
    for (auto v : isolated_vertices(q)) isolated += q.vertex_size(v);
    CHECK(isolated == b.isolated);
  }
}

TEST_CASE("frozen diameters of small groups") {
  CHECK(reported(graph_diameter(QuotientGraph(named("alt:5"), GraphKind::nc))) == 2);
  CHECK(reported(graph_diameter(QuotientGraph(named("psl:2:11"), GraphKind::nc))) == 3);
  CHECK(reported(graph_diameter(QuotientGraph(named("sym:5"), GraphKind::nc))) == 3);
  CHECK(reported(graph_diameter(QuotientGraph(named("alt:4"), GraphKind::nc))) == -1);
}

TEST_CASE("reduction plan matches all-pairs evaluation") {
  for (const char* spec : {"alt:5", "alt:6", "sym:5", "psl:2:7", "psl:2:8", "psl:2:11", "pgl:2:7", "psl:2:13"}) {
    const auto g = named(spec);
    for (auto kind : {GraphKind::nc, GraphKind::nongen}) {
      CAPTURE(spec);
      BuildOptions with, without;
      without.use_plan = false;
      QuotientGraph a(g, kind, with), b(g, kind, without);
      REQUIRE(a.vertex_count() == b.vertex_count());
      REQUIRE(a.vertex_count() <= 2000);
      bool same = true;
      for (std::size_t v = 0; v < a.vertex_count(); ++v) same = same && a.row(v) == b.row(v);
      CHECK(same);
      CHECK(a.stats().pairs_evaluated < b.stats().pairs_evaluated);
      const auto ra = graph_diameter(a, true), rb = graph_diameter(b, false);
      CHECK(reported(ra) == reported(rb));
      CHECK(ra.bfs_sources == a.plan().reps.size());

      const auto& plan = a.plan();
      std::uint64_t total = 0;
      for (auto s : plan.class_size) total += s;
      CHECK(total == a.vertex_count());
      for (std::size_t k = 0; k < plan.reps.size(); ++k) {
        CHECK(plan.class_of[plan.reps[k]] == k);
        CHECK(g.order() % plan.centralizer_order[k] == 0);
      }
    }
  }
}

TEST_CASE("adjacency is constant on cyclic subgroups") {
  std::mt19937_64 rng(11);
  for (const char* spec : {"alt:6", "psl:2:11", "mathieu:11", "psu:3:3"}) {
    const auto g = named(spec);
    for (auto kind : {GraphKind::nc, GraphKind::nongen}) {
      QuotientGraph q(g, kind);
      const std::size_t n = q.vertex_count();
      int mismatches = 0;
      for (int i = 0; i < 1000; ++i) {
        const std::size_t u = rng() % n, v = rng() % n;
        const auto eu = q.vertex_elements(u), ev = q.vertex_elements(v);
        const auto& x = eu[rng() % eu.size()];
        const auto& y = ev[rng() % ev.size()];
        if (x == y) continue;
        const bool direct = kind == GraphKind::nc ? nc_adjacent(g, x, y) : nongen_adjacent(g, x, y);
        const bool stored = u == v ? q.self_adjacent(u) : q.adjacent(u, v);
        mismatches += direct != stored;
      }
      CAPTURE(spec);
      CHECK(mismatches == 0);
    }
  }
}

TEST_CASE("no vertex is adjacent to its powers") {
  for (const char* spec : {"alt:6", "psl:2:13", "mathieu:11"}) {
    QuotientGraph q(named(spec), GraphKind::nc);
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
      const auto x = q.generator(v);
      for (std::uint64_t k = 2; k < q.element_order(v); ++k) {
        const auto w = q.vertex_of(x.pow(static_cast<std::int64_t>(k)));
        if (w && *w != v) CHECK(!q.adjacent(v, *w));
      }
    }
  }
}

TEST_CASE("nc is a spanning subgraph of the non-generating graph") {
  for (const char* spec : {"alt:5", "alt:6", "alt:7", "psl:2:7", "psl:2:8", "psl:2:11", "psl:3:3", "mathieu:11", "sym:5",
                           "pgl:2:7", "psu:3:3"}) {
    CAPTURE(spec);
    const auto g = named(spec);
    QuotientGraph nc(g, GraphKind::nc), ng(g, GraphKind::nongen);
    bool spanning = true;
    for (std::size_t u = 0; u < nc.vertex_count(); ++u) {
      const auto gu = *ng.vertex_of(nc.generator(u));
      nc.row(u).for_each([&](std::size_t v) { spanning = spanning && ng.adjacent(gu, *ng.vertex_of(nc.generator(v))); });
    }
    CHECK(spanning);
    const auto dn = graph_diameter(nc), dg = graph_diameter(ng);
    REQUIRE(dn.diameter);
    REQUIRE(dg.diameter);
    CHECK(*dg.diameter <= *dn.diameter);
    CHECK(*dn.diameter >= 2);
    CHECK(*dn.diameter <= 5);
    CHECK(*dg.diameter <= 4);
  }
}

TEST_CASE("isolated vertices") {
  // S3: every pair of non-commuting elements generates S3.
  QuotientGraph s3(named("sym:3"), GraphKind::nc);
  CHECK(s3.vertex_count() == 4);
  CHECK(isolated_vertices(s3).size() == 4);
  const auto r = graph_diameter(s3);
  CHECK(!r.connected);
  CHECK(!r.diameter);
  CHECK(r.isolated.size() == 4);
  std::uint64_t elements = 0;
  for (const auto& c : r.components) elements += c.elements * c.multiplicity;
  CHECK(elements == 5);

  for (const char* spec : {"alt:5", "alt:6", "sym:5", "psl:2:7", "psl:2:8", "pgl:2:7", "mathieu:11", "psu:3:3"}) {
    CAPTURE(spec);
    CHECK(isolated_vertices(QuotientGraph(named(spec), GraphKind::nc)).empty());
  }
  CHECK(isolated_vertices(QuotientGraph(named("alt:5"), GraphKind::nongen)).empty());
}

TEST_CASE("distance and path") {
  const auto a5 = named("alt:5");
  QuotientGraph q(a5, GraphKind::nc);
  const auto x = Permutation::parse(5, "(0 1 2)");
  auto p = distance_and_path(q, x, x * x);
  REQUIRE(p.distance);
  CHECK(*p.distance == 2);
  CHECK(p.path.size() == 3);
  CHECK(nc_adjacent(a5, p.path[0], p.path[1]));
  CHECK(nc_adjacent(a5, p.path[1], p.path[2]));
  const auto y = Permutation::parse(5, "(0 1 3)");
  p = distance_and_path(q, x, y);
  CHECK(*p.distance == 1);
  CHECK(p.path == std::vector<Permutation>{x, y});
  CHECK(*distance_and_path(q, x, x).distance == 0);
  CHECK_THROWS_AS(distance_and_path(q, x, a5.identity()), std::invalid_argument);

  QuotientGraph s3(named("sym:3"), GraphKind::nc);
  CHECK(!distance_and_path(s3, Permutation::parse(3, "(0 1)"), Permutation::parse(3, "(0 2)")).distance);

  // PSL(2,11): elements of order 6 lying in different dihedral maximal
  // subgroups can be at distance 3.
  const auto g = named("psl:2:11");
  QuotientGraph l(g, GraphKind::nc);
  std::vector<std::size_t> order6;
  for (std::size_t v = 0; v < l.vertex_count(); ++v)
    if (l.element_order(v) == 6) order6.push_back(v);
  CHECK(order6.size() == 55);
  unsigned far = 0;
  for (auto v : order6) {
    const auto d = distance_and_path(l, l.generator(order6.front()), l.generator(v));
    REQUIRE(d.distance);
    far = std::max(far, *d.distance);
  }
  CHECK(far == 3);
}

TEST_CASE("witness paths are re-verified") {
  for (const char* spec : {"psl:2:11", "sym:5", "alt:7"}) {
    const auto g = named(spec);
    QuotientGraph q(g, GraphKind::nc);
    const auto r = graph_diameter(q);
    REQUIRE(r.diameter);
    REQUIRE(r.witness_path.size() == *r.diameter + 1);
    for (std::size_t i = 0; i + 1 < r.witness_path.size(); ++i)
      CHECK(nc_adjacent(g, r.witness_path[i], r.witness_path[i + 1]));
    const auto d = distance_and_path(q, r.witness_pair[0], r.witness_pair[1]);
    CHECK(d.distance == r.diameter);
  }
}

TEST_CASE("caps and deadlines") {
  BuildOptions tiny;
  tiny.max_vertices = 10;
  CHECK_THROWS_AS(QuotientGraph(named("alt:5"), GraphKind::nc, tiny), CapExceeded);
  BuildOptions small;
  small.max_order = 50;
  CHECK_THROWS_AS(QuotientGraph(named("alt:5"), GraphKind::nc, small), CapExceeded);
  CHECK_THROWS_AS(QuotientGraph(named("alt:5"), GraphKind::intersection), std::invalid_argument);
  BuildOptions late;
  late.deadline = Deadline::after(1e-9);
  CHECK_THROWS_AS(QuotientGraph(named("alt:8"), GraphKind::nc, late), TimeBudgetExceeded);
}

TEST_CASE("subgroup enumeration") {
  const auto a5 = named("alt:5");
  perm::ElementTable t(a5);
  const auto subs = proper_subgroups(t);
  CHECK(subs.size() == 57);
  std::map<std::uint64_t, int> by_order;
  for (const auto& s : subs) ++by_order[s.order];
  // 15 C2, 10 C3, 6 C5, 5 V4, 10 S3, 6 D10, 5 A4, plus the trivial subgroup
  // excluded here: 57 proper nontrivial, 59 subgroups in all.
  CHECK(by_order == std::map<std::uint64_t, int>{{2, 15}, {3, 10}, {4, 5}, {5, 6}, {6, 10}, {10, 6}, {12, 5}});

  perm::ElementTable p(named("psl:2:7"));
  CHECK(proper_subgroups(p).size() == 177);
  CHECK_THROWS_AS(proper_subgroups(p, 100), CapExceeded);

  for (const auto& s : subs) {
    const auto h = to_perm_group(t, s);
    CHECK(h.order() == s.order);
  }
}

TEST_CASE("intersection graph and the non-generating graph") {
  for (const char* spec : {"alt:5", "psl:2:7"}) {
    CAPTURE(spec);
    const auto g = named(spec);
    const auto delta = intersection_graph_diameter(g);
    REQUIRE(delta.diameter);
    CHECK(delta.kind == GraphKind::intersection);
    CHECK(delta.witness_labels.size() == *delta.diameter + 1);
    for (auto kind : {GraphKind::nc, GraphKind::nongen}) {
      const auto r = graph_diameter(QuotientGraph(g, kind));
      REQUIRE(r.diameter);
      CHECK(*r.diameter + 1 >= *delta.diameter);
    }
    const auto ng = graph_diameter(QuotientGraph(g, GraphKind::nongen));
    CHECK(*ng.diameter <= *delta.diameter + 1);
    CHECK(*delta.diameter <= *ng.diameter + 1);
  }
  CHECK_THROWS_AS(intersection_graph_diameter(named("alt:8")), CapExceeded);
}

TEST_CASE("maximal subgroups") {
  struct Expect {
    const char* spec;
    std::vector<std::pair<std::uint64_t, std::size_t>> classes;  // order, conjugates
  };
  const std::vector<Expect> expect = {
      {"alt:5", {{12, 5}, {10, 6}, {6, 10}}},
      {"psl:2:7", {{24, 7}, {24, 7}, {21, 8}}},
      {"alt:6", {{60, 6}, {60, 6}, {36, 10}, {24, 15}, {24, 15}}},
  };
  for (const auto& e : expect) {
    CAPTURE(e.spec);
    const auto g = named(e.spec);
    const auto m = maximal_subgroups(g);
    std::vector<std::pair<std::uint64_t, std::size_t>> got;
    for (const auto& c : m) {
      got.push_back({c.order, c.conjugates});
      CHECK(c.representative.order() == c.order);
      CHECK(c.order * c.conjugates == g.order());
      const auto induced = induced_nc_diameter(g, c.representative);
      CHECK(induced.connected);
      CHECK(induced.diameter == 2);
    }
    CHECK(got == e.classes);
  }
  // PSL(2,7) has a maximal subgroup of odd order.
  bool odd = false;
  for (const auto& c : maximal_subgroups(named("psl:2:7"))) odd = odd || c.order % 2 == 1;
  CHECK(odd);
}

TEST_CASE("non-commuting involutions generate a proper dihedral subgroup") {
  for (const char* spec : {"alt:5", "alt:6", "psl:2:7", "psl:2:11"}) {
    const auto g = named(spec);
    std::vector<Permutation> inv;
    for (auto& e : perm::group_elements(g))
      if (e.order() == 2) inv.push_back(std::move(e));
    int tested = 0;
    for (std::size_t i = 0; i < inv.size() && tested < 2000; ++i)
      for (std::size_t j = i + 1; j < inv.size() && tested < 2000; ++j) {
        const auto& a = inv[i];
        const auto& b = inv[j];
        if (a * b == b * a) continue;
        ++tested;
        CHECK(perm::closure_order(g.degree(), {a, b}) == 2 * (a * b).order());
        CHECK(nc_adjacent(g, a, b));
      }
    CHECK(tested > 0);
  }
}

TEST_CASE("report serialisation") {
  const auto r = graph_diameter(QuotientGraph(named("psl:2:11"), GraphKind::nc));
  const auto j = report_json(r);
  CHECK(j["schema"] == 1);
  CHECK(j["diameter"] == 3);
  CHECK(j["graph"] == "nc");
  CHECK(j["group"] == "PSL(2,11)");
  CHECK(j["witness_pair"].size() == 2);
  CHECK(j["witness_path"].size() == 4);
  CHECK(j.contains("timings"));
  auto a = report_json(graph_diameter(QuotientGraph(named("psl:2:11"), GraphKind::nc)));
  auto b = j;
  a.erase("timings");
  b.erase("timings");
  CHECK(a.dump() == b.dump());

  const auto disconnected = report_json(graph_diameter(QuotientGraph(named("sym:3"), GraphKind::nc)));
  CHECK(disconnected["diameter"].is_null());
  CHECK(!disconnected["connected"].get<bool>());
  const auto row = csv_row(graph_diameter(QuotientGraph(named("sym:3"), GraphKind::nc)));
  CHECK(row.find(",inf,") != std::string::npos);
  CHECK(csv_header().rfind("group,graph,", 0) == 0);
}
