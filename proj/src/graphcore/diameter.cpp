#include <algorithm>
#include <stdexcept>

#include "ncg/graph.hpp"
#include "ncg/parallel.hpp"

namespace ncg::graph {

namespace {

constexpr std::uint32_t kInf = QuotientGraph::kNone;

struct Eccentricity {
  std::uint32_t ecc = 0;   // largest finite distance
  std::uint32_t far = 0;   // least vertex at that distance
  std::size_t reached = 0;
};

Eccentricity eccentricity(const QuotientGraph& q, std::size_t source) {
  const auto dist = bfs_distances(q, source);
  Eccentricity e;
  e.far = static_cast<std::uint32_t>(source);
  for (std::size_t v = 0; v < dist.size(); ++v) {
    if (dist[v] == kInf) continue;
    ++e.reached;
    if (dist[v] > e.ecc) {
      e.ecc = dist[v];
      e.far = static_cast<std::uint32_t>(v);
    }
  }
  return e;
}

// Distance between two distinct elements of the same vertex; kInf when
// disconnected, 0 when the vertex has a single element.
std::uint32_t within_distance(const QuotientGraph& q, std::size_t v) {
  if (q.vertex_size(v) < 2) return 0;
  if (q.self_adjacent(v)) return 1;
  return q.row(v).any() ? 2 : kInf;
}

std::vector<std::size_t> shortest_vertex_path(const QuotientGraph& q, std::size_t s, std::size_t t) {
  const std::size_t nv = q.vertex_count();
  std::vector<std::uint32_t> parent(nv, kInf);
  parent[s] = static_cast<std::uint32_t>(s);
  std::vector<std::uint32_t> queue{static_cast<std::uint32_t>(s)};
  for (std::size_t h = 0; h < queue.size() && parent[t] == kInf; ++h) {
    const std::uint32_t u = queue[h];
    q.row(u).for_each([&](std::size_t w) {
      if (parent[w] == kInf) {
        parent[w] = u;
        queue.push_back(static_cast<std::uint32_t>(w));
      }
    });
  }
  if (parent[t] == kInf) return {};
  std::vector<std::size_t> path{t};
  while (path.back() != s) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

void verify_path(const QuotientGraph& q, const std::vector<Permutation>& path, unsigned distance) {
  if (path.size() != distance + 1u) throw std::logic_error("witness path length differs from the reported distance");
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (!q.element_adjacent(path[i], path[i + 1])) throw std::logic_error("witness path contains a non-edge");
}

// x and a second generator of the same cyclic subgroup, joined by a path of
// the within-vertex distance.
std::vector<Permutation> within_path(const QuotientGraph& q, std::size_t v) {
  const auto elements = q.vertex_elements(v);
  const Permutation& x = elements[0];
  const Permutation& y = elements[1];
  if (q.self_adjacent(v)) return {x, y};
  return {x, q.generator(q.row(v).find_next(0)), y};
}

}  // namespace

std::vector<std::uint32_t> bfs_distances(const QuotientGraph& q, std::size_t source) {
  const std::size_t nv = q.vertex_count();
  std::vector<std::uint32_t> dist(nv, kInf);
  Bitset visited(nv), next(nv);
  std::vector<std::uint32_t> frontier{static_cast<std::uint32_t>(source)};
  dist[source] = 0;
  visited.set(source);
  auto& vw = visited.words();
  auto& nw = next.words();
  for (std::uint32_t d = 1; !frontier.empty(); ++d) {
    next.clear();
    for (auto u : frontier) next |= q.row(u);
    frontier.clear();
    for (std::size_t w = 0; w < nw.size(); ++w) {
      std::uint64_t fresh = nw[w] & ~vw[w];
      vw[w] |= fresh;
      while (fresh) {
        const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(fresh));
        fresh &= fresh - 1;
        dist[v] = d;
        frontier.push_back(static_cast<std::uint32_t>(v));
      }
    }
  }
  return dist;
}

std::vector<std::size_t> isolated_vertices(const QuotientGraph& q) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < q.vertex_count(); ++v)
    if (!q.row(v).any() && !(q.self_adjacent(v) && q.vertex_size(v) >= 2)) out.push_back(v);
  return out;
}

DiameterReport graph_diameter(const QuotientGraph& q, bool use_plan, const Deadline& deadline) {
  const auto start = Deadline::Clock::now();
  const std::size_t nv = q.vertex_count();
  const auto& plan = q.plan();
  DiameterReport r;
  r.kind = q.kind();
  r.group = q.group().name();
  r.group_order = q.group().order();
  r.quotient_vertices = nv;
  r.vertex_count = q.element_count();
  r.plan_used = use_plan;
  r.build_seconds = q.stats().seconds;
  r.generation_tests = q.stats().generation_tests;
  r.pairs_evaluated = q.stats().pairs_evaluated;
  if (nv == 0) {
    r.connected = r.vertex_count <= 1;
    if (r.connected) r.diameter = 0;
    return r;
  }

  std::vector<std::size_t> sources;
  if (use_plan) sources = plan.reps;
  else
    for (std::size_t v = 0; v < nv; ++v) sources.push_back(v);
  r.bfs_sources = sources.size();
  std::vector<Eccentricity> ecc(sources.size());
  parallel_for(0, sources.size(), [&](std::size_t i) {
    deadline.check("diameter search");
    ecc[i] = eccentricity(q, sources[i]);
  });
  auto ecc_of = [&](std::size_t v) -> const Eccentricity& { return ecc[use_plan ? plan.class_of[v] : v]; };

  // Components of the quotient graph.
  std::vector<std::uint32_t> comp(nv, kInf);
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t v = 0; v < nv; ++v) {
    if (comp[v] != kInf) continue;
    const auto c = static_cast<std::uint32_t>(members.size());
    const auto dist = bfs_distances(q, v);
    members.emplace_back();
    for (std::size_t w = 0; w < nv; ++w)
      if (dist[w] != kInf) {
        comp[w] = c;
        members.back().push_back(w);
      }
  }
  const bool quotient_connected = members.size() == 1;

  for (const auto& m : members) {
    ComponentInfo info;
    info.vertices = m.size();
    info.representative = q.generator(m.front());
    if (m.size() == 1 && within_distance(q, m.front()) == kInf) {
      info.elements = 1;
      info.multiplicity = q.vertex_size(m.front());
    } else {
      for (auto v : m) {
        info.elements += q.vertex_size(v);
        info.diameter = std::max({info.diameter, ecc_of(v).ecc, within_distance(q, v)});
      }
    }
    r.components.push_back(std::move(info));
  }
  r.connected = r.components.size() == 1 && r.components.front().multiplicity == 1;

  std::uint32_t best_gamma = 0, best_within = 0;
  std::size_t gamma_source = 0, within_vertex = 0;
  for (std::size_t i = 0; i < sources.size(); ++i)
    if (ecc[i].ecc > best_gamma) {
      best_gamma = ecc[i].ecc;
      gamma_source = i;
    }
  for (std::size_t v = 0; v < nv; ++v) {
    const std::uint32_t w = within_distance(q, v);
    if (w != kInf && w > best_within) {
      best_within = w;
      within_vertex = v;
    }
  }
  if (quotient_connected) r.quotient_diameter = best_gamma;
  if (r.connected) r.diameter = std::max(best_gamma, best_within);

  unsigned witness_distance = 0;
  if (best_gamma >= best_within && best_gamma > 0) {
    const std::size_t s = sources[gamma_source];
    for (auto v : shortest_vertex_path(q, s, ecc[gamma_source].far)) r.witness_path.push_back(q.generator(v));
    witness_distance = best_gamma;
  } else if (best_within > 0) {
    r.witness_path = within_path(q, within_vertex);
    witness_distance = best_within;
  }
  if (!r.witness_path.empty()) {
    verify_path(q, r.witness_path, witness_distance);
    r.witness_pair = {r.witness_path.front(), r.witness_path.back()};
  }

  for (auto v : isolated_vertices(q)) r.isolated.push_back(q.generator(v));
  r.quotient_edges = q.quotient_edge_count();
  r.edge_count = q.element_edge_count();
  r.diameter_seconds = seconds_since(start);
  return r;
}

PathResult distance_and_path(const QuotientGraph& q, const Permutation& x, const Permutation& y) {
  const auto vx = q.vertex_of(x), vy = q.vertex_of(y);
  if (!vx || !vy) throw std::invalid_argument("element is not a vertex of the graph");
  PathResult r;
  if (x == y) {
    r.distance = 0;
    r.path = {x};
    return r;
  }
  if (*vx == *vy) {
    const std::uint32_t w = within_distance(q, *vx);
    if (w == kInf) return r;
    r.distance = w;
    r.path = w == 1 ? std::vector<Permutation>{x, y}
                    : std::vector<Permutation>{x, q.generator(q.row(*vx).find_next(0)), y};
  } else {
    const auto vp = shortest_vertex_path(q, *vx, *vy);
    if (vp.empty()) return r;
    r.distance = static_cast<unsigned>(vp.size() - 1);
    r.path.push_back(x);
    for (std::size_t i = 1; i + 1 < vp.size(); ++i) r.path.push_back(q.generator(vp[i]));
    r.path.push_back(y);
  }
  verify_path(q, r.path, *r.distance);
  return r;
}

}  // namespace ncg::graph
