#include "ncg/subgroups.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "ncg/classes.hpp"
#include "ncg/errors.hpp"

namespace ncg::graph {

namespace {

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

std::string subgroup_label(const perm::ElementTable& t, const Subgroup& s) {
  std::string label = "order " + std::to_string(s.order) + " <";
  for (std::size_t i = 0; i < s.generators.size(); ++i) {
    if (i) label += ", ";
    label += t.element(s.generators[i]).to_string();
  }
  return label + ">";
}

// All-pairs BFS over bitset rows; returns (connected, diameter, s, t) with a
// pair realising the largest finite distance.
struct AllPairs {
  bool connected = true;
  unsigned diameter = 0;
  std::size_t s = 0, t = 0;
};

AllPairs all_pairs_bfs(const std::vector<Bitset>& rows) {
  AllPairs out;
  const std::size_t n = rows.size();
  for (std::size_t src = 0; src < n; ++src) {
    Bitset seen(n);
    seen.set(src);
    std::vector<std::size_t> frontier{src};
    unsigned d = 0;
    std::size_t reached = 1, last = src;
    while (!frontier.empty()) {
      std::vector<std::size_t> next;
      for (auto u : frontier)
        rows[u].for_each([&](std::size_t w) {
          if (!seen.test(w)) {
            seen.set(w);
            next.push_back(w);
          }
        });
      if (next.empty()) break;
      ++d;
      reached += next.size();
      last = *std::min_element(next.begin(), next.end());
      frontier = std::move(next);
    }
    if (reached < n) out.connected = false;
    if (d > out.diameter) {
      out.diameter = d;
      out.s = src;
      out.t = last;
    }
  }
  return out;
}

std::vector<std::size_t> path_between(const std::vector<Bitset>& rows, std::size_t s, std::size_t t) {
  std::vector<std::size_t> parent(rows.size(), rows.size());
  parent[s] = s;
  std::vector<std::size_t> queue{s};
  for (std::size_t h = 0; h < queue.size() && parent[t] == rows.size(); ++h)
    rows[queue[h]].for_each([&](std::size_t w) {
      if (parent[w] == rows.size()) {
        parent[w] = queue[h];
        queue.push_back(w);
      }
    });
  std::vector<std::size_t> path{t};
  while (path.back() != s) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

// Canonical generators (least index) of the non-identity cyclic subgroups.
std::vector<std::size_t> cyclic_generators(const perm::ElementTable& t) {
  std::vector<char> done(t.size(), 0);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (done[i] || i == t.identity_index()) continue;
    out.push_back(i);
    const Permutation x = t.element(i);
    const std::uint64_t ord = x.order();
    Permutation p = x;
    for (std::uint64_t k = 1; k < ord; ++k, p = p * x)
      if (std::gcd(k, ord) == 1) done[t.index_of(p)] = 1;
  }
  return out;
}

// Elements generating the whole tabulated group, added greedily by index.
std::vector<std::size_t> table_generators(const perm::ElementTable& t);

}  // namespace

Subgroup subgroup_closure(const perm::ElementTable& t, std::vector<std::size_t> generators) {
  Subgroup s;
  s.elements = Bitset(t.size());
  s.generators = std::move(generators);
  std::vector<std::size_t> queue{t.identity_index()};
  s.elements.set(t.identity_index());
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (auto g : s.generators) {
      const std::size_t e = t.multiply(queue[h], g);
      if (!s.elements.test(e)) {
        s.elements.set(e);
        queue.push_back(e);
      }
    }
  s.order = queue.size();
  return s;
}

PermGroup to_perm_group(const perm::ElementTable& t, const Subgroup& s, std::string name) {
  std::vector<Permutation> gens;
  for (auto i : s.generators) gens.push_back(t.element(i));
  return PermGroup(t.degree(), std::move(gens), std::move(name));
}

namespace {

std::vector<std::size_t> table_generators(const perm::ElementTable& t) {
  Subgroup s = subgroup_closure(t, {});
  for (std::size_t i = 0; i < t.size() && s.order < t.size(); ++i)
    if (!s.elements.test(i)) {
      auto gens = s.generators;
      gens.push_back(i);
      s = subgroup_closure(t, std::move(gens));
    }
  return s.generators;
}

}  // namespace

std::vector<SubgroupClass> subgroup_classes(const perm::ElementTable& t, const std::vector<std::size_t>& group_generators,
                                            std::size_t max_subgroups) {
  const auto cyclic = cyclic_generators(t);
  std::unordered_map<Bitset, std::size_t, BitsetHash> seen;  // every conjugate -> class
  std::vector<SubgroupClass> classes;
  std::size_t total = 0;
  auto add = [&](Subgroup s) {
    if (s.order == t.size() || seen.count(s.elements)) return;
    SubgroupClass c;
    seen.emplace(s.elements, classes.size());
    c.conjugates.push_back(std::move(s));
    for (std::size_t h = 0; h < c.conjugates.size(); ++h)
      for (auto g : group_generators) {
        Subgroup img;
        img.elements = Bitset(t.size());
        c.conjugates[h].elements.for_each([&](std::size_t e) { img.elements.set(t.conjugate(e, g)); });
        if (seen.count(img.elements)) continue;
        for (auto e : c.conjugates[h].generators) img.generators.push_back(t.conjugate(e, g));
        img.order = c.conjugates[h].order;
        seen.emplace(img.elements, classes.size());
        c.conjugates.push_back(std::move(img));
      }
    total += c.conjugates.size();
    if (total > max_subgroups) throw CapExceeded("more than " + std::to_string(max_subgroups) + " subgroups");
    classes.push_back(std::move(c));
  };
  for (auto c : cyclic) add(subgroup_closure(t, {c}));
  for (std::size_t h = 0; h < classes.size(); ++h) {
    const Bitset elements = classes[h].conjugates.front().elements;
    const auto generators = classes[h].conjugates.front().generators;
    bool maximal = true;
    for (auto c : cyclic) {
      if (elements.test(c)) continue;
      auto gens = generators;
      gens.push_back(c);
      Subgroup k = subgroup_closure(t, std::move(gens));
      if (k.order == t.size()) continue;
      maximal = false;
      add(std::move(k));
    }
    classes[h].maximal = maximal;
  }
  return classes;
}

std::vector<Subgroup> proper_subgroups(const perm::ElementTable& t, std::size_t max_subgroups) {
  std::vector<Subgroup> out;
  for (auto& c : subgroup_classes(t, table_generators(t), max_subgroups))
    for (auto& s : c.conjugates) out.push_back(std::move(s));
  return out;
}

DiameterReport intersection_graph_diameter(const PermGroup& g, std::uint64_t max_order) {
  const auto start = Deadline::Clock::now();
  if (g.order() > max_order)
    throw CapExceeded("intersection graph needs |G| <= " + std::to_string(max_order) + ", got " + std::to_string(g.order()));
  perm::ElementTable t(g, max_order);
  const auto subs = proper_subgroups(t);
  const std::size_t n = subs.size();
  std::vector<Bitset> nontrivial;
  for (const auto& s : subs) {
    Bitset b = s.elements;
    b.reset(t.identity_index());
    nontrivial.push_back(std::move(b));
  }
  std::vector<Bitset> rows(n, Bitset(n));
  std::uint64_t edges = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (nontrivial[i].intersects(nontrivial[j])) {
        rows[i].set(j);
        rows[j].set(i);
        ++edges;
      }
  DiameterReport r;
  r.kind = GraphKind::intersection;
  r.group = g.name();
  r.group_order = g.order();
  r.vertex_count = n;
  r.quotient_vertices = n;
  r.edge_count = edges;
  r.quotient_edges = edges;
  r.build_seconds = seconds_since(start);
  const auto ap = all_pairs_bfs(rows);
  r.connected = ap.connected && n > 0;
  r.bfs_sources = n;
  if (r.connected) {
    r.diameter = ap.diameter;
    r.quotient_diameter = ap.diameter;
  }
  if (n > 0)
    for (auto v : path_between(rows, ap.s, ap.t)) r.witness_labels.push_back(subgroup_label(t, subs[v]));
  r.diameter_seconds = seconds_since(start) - r.build_seconds;
  return r;
}

std::vector<MaximalSubgroupClass> maximal_subgroups(const PermGroup& g, std::uint64_t max_order) {
  if (g.order() > max_order)
    throw CapExceeded("maximal subgroup search needs |G| <= " + std::to_string(max_order) + ", got " + std::to_string(g.order()));
  perm::ElementTable t(g, max_order);
  std::vector<std::size_t> gens;
  for (const auto& s : g.generators())
    if (!s.is_identity()) gens.push_back(t.index_of(s));
  std::vector<MaximalSubgroupClass> out;
  for (const auto& c : subgroup_classes(t, gens)) {
    if (!c.maximal) continue;
    const Subgroup& rep = c.conjugates.front();
    MaximalSubgroupClass m;
    m.order = rep.order;
    m.conjugates = c.conjugates.size();
    m.representative = to_perm_group(t, rep, g.name() + " maximal of order " + std::to_string(m.order));
    out.push_back(std::move(m));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.order > b.order; });
  return out;
}

InducedDiameter induced_nc_diameter(const PermGroup& g, const PermGroup& h) {
  for (const auto& s : h.generators())
    if (!g.contains(s)) throw std::invalid_argument("H is not a subgroup of G");
  const GenerationTest gen(g);
  std::vector<Permutation> verts;
  for (auto& e : perm::group_elements(h)) {
    bool central = true;
    for (const auto& s : h.generators()) central = central && e * s == s * e;
    if (!central) verts.push_back(std::move(e));
  }
  const std::size_t n = verts.size();
  std::vector<Bitset> rows(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (verts[i] * verts[j] == verts[j] * verts[i]) continue;
      if (gen.generates(verts[i], verts[j])) continue;
      rows[i].set(j);
      rows[j].set(i);
    }
  InducedDiameter out;
  out.vertices = n;
  const auto ap = all_pairs_bfs(rows);
  out.connected = ap.connected;
  out.diameter = ap.diameter;
  return out;
}

}  // namespace ncg::graph
