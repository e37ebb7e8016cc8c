#include <stdexcept>

#include "ncg/errors.hpp"
#include "ncg/graph.hpp"

namespace ncg::graph {

std::string_view to_string(GraphKind k) {
  switch (k) {
    case GraphKind::nc: return "nc";
    case GraphKind::nongen: return "nongen";
    case GraphKind::intersection: return "intersection";
  }
  return "?";
}

GraphKind parse_graph_kind(std::string_view s) {
  if (s == "nc") return GraphKind::nc;
  if (s == "nongen") return GraphKind::nongen;
  if (s == "intersection") return GraphKind::intersection;
  throw ParseError("unknown graph kind '" + std::string(s) + "' (expected nc, nongen or intersection)");
}

GenerationTest::GenerationTest(const PermGroup& g)
    : degree_(g.degree()), orbits_(perm::orbit_count(g.degree(), g.generators())), base_(g.base()), order_(g.order()) {}

bool GenerationTest::generates(const std::vector<Permutation>& gens) const {
  calls_.fetch_add(1, std::memory_order_relaxed);
  if (order_ == 1) return true;
  if (perm::orbit_count(degree_, gens) != orbits_) return false;
  perm::StabChain::Options opt;
  opt.base_hint = base_;
  opt.target_order = order_;
  return perm::StabChain(degree_, gens, opt).order() >= order_;
}

bool GenerationTest::generates(const Permutation& x, const Permutation& y) const { return generates({x, y}); }

bool is_central(const PermGroup& g, const Permutation& x) {
  for (const auto& s : g.generators())
    if (x * s != s * x) return false;
  return true;
}

bool nc_adjacent(const PermGroup& g, const Permutation& x, const Permutation& y) {
  for (const auto* e : {&x, &y}) {
    if (!g.contains(*e)) throw std::invalid_argument("element is not in the group");
    if (is_central(g, *e)) throw std::invalid_argument("central element is not a vertex of nc(G)");
  }
  if (x * y == y * x) return false;
  return !GenerationTest(g).generates(x, y);
}

bool nongen_adjacent(const PermGroup& g, const Permutation& x, const Permutation& y) {
  for (const auto* e : {&x, &y}) {
    if (!g.contains(*e)) throw std::invalid_argument("element is not in the group");
    if (e->is_identity()) throw std::invalid_argument("identity is not a vertex of the non-generating graph");
  }
  return !GenerationTest(g).generates(x, y);
}

}  // namespace ncg::graph
