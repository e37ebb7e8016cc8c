#include <numeric>
#include <stdexcept>

#include "ncg/classes.hpp"
#include "ncg/errors.hpp"
#include "ncg/graph.hpp"
#include "ncg/parallel.hpp"

namespace ncg::graph {

namespace {

std::uint32_t find_root(std::vector<std::uint32_t>& parent, std::uint32_t a) {
  while (parent[a] != a) {
    parent[a] = parent[parent[a]];
    a = parent[a];
  }
  return a;
}

}  // namespace

QuotientGraph::QuotientGraph(const PermGroup& g, GraphKind kind, const BuildOptions& opt)
    : g_(g), kind_(kind), use_plan_(opt.use_plan) {
  if (kind == GraphKind::intersection) throw std::invalid_argument("the intersection graph has no element quotient");
  const auto start = Deadline::Clock::now();
  if (g.order() > opt.max_order)
    throw CapExceeded("group order " + std::to_string(g.order()) + " exceeds the graph cap " + std::to_string(opt.max_order));
  table_ = std::make_unique<perm::ElementTable>(g, opt.max_order);
  gen_ = std::make_unique<GenerationTest>(g);
  assign_vertices(opt.max_vertices);
  opt.deadline.check("graph construction");
  if (use_plan_) build_with_plan(opt.deadline);
  else build_all_pairs(opt.deadline);
  stats_.generation_tests = gen_->calls();
  stats_.commuting_pairs = commuting_.load();
  stats_.seconds = seconds_since(start);
}

void QuotientGraph::assign_vertices(std::size_t max_vertices) {
  const std::size_t n = table_->size();
  vertex_of_.assign(n, kNone);
  std::vector<char> done(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (done[i]) continue;
    done[i] = 1;
    const Permutation x = table_->element(i);
    if (x.is_identity()) continue;
    if (kind_ == GraphKind::nc && is_central(g_, x)) {
      ++center_order_;
      continue;
    }
    if (canon_.size() >= max_vertices)
      throw CapExceeded("quotient graph exceeds " + std::to_string(max_vertices) + " vertices");
    const auto v = static_cast<std::uint32_t>(canon_.size());
    const std::uint64_t ord = x.order();
    std::uint64_t count = 0;
    Permutation p = x;
    for (std::uint64_t k = 1; k < ord; ++k, p = p * x) {
      if (std::gcd(k, ord) != 1) continue;
      const std::size_t j = table_->index_of(p);
      vertex_of_[j] = v;
      done[j] = 1;
      ++count;
    }
    canon_.push_back(i);
    order_.push_back(ord);
    size_.push_back(count);
  }
  element_count_ = kind_ == GraphKind::nc ? n - center_order_ : n - 1;
  const std::size_t nv = canon_.size();
  rows_.assign(nv, Bitset(nv));
  loops_ = Bitset(nv);
  if (kind_ == GraphKind::nongen)
    for (std::size_t v = 0; v < nv; ++v)
      if (order_[v] != g_.order()) loops_.set(v);
}

std::vector<std::uint32_t> QuotientGraph::vertex_permutation(std::size_t h) const {
  std::vector<std::uint32_t> perm(canon_.size());
  for (std::size_t v = 0; v < canon_.size(); ++v) perm[v] = vertex_of_[table_->conjugate(canon_[v], h)];
  return perm;
}

bool QuotientGraph::vertex_pair_adjacent(std::size_t u, std::size_t v) const {
  const perm::Point* a = table_->images(canon_[u]);
  const perm::Point* b = table_->images(canon_[v]);
  bool commute = true;
  for (std::size_t i = 0; i < table_->degree() && commute; ++i) commute = b[a[i]] == a[b[i]];
  if (commute) {
    commuting_.fetch_add(1, std::memory_order_relaxed);
    if (kind_ == GraphKind::nc) return false;
  }
  return !gen_->generates(generator(u), generator(v));
}

void QuotientGraph::build_with_plan(const Deadline& deadline) {
  const std::size_t nv = canon_.size();
  std::vector<std::vector<std::uint32_t>> gen_perms;
  for (const auto& s : g_.generators())
    if (!s.is_identity()) gen_perms.push_back(vertex_permutation(table_->index_of(s)));

  // Conjugacy classes of vertices, with a spanning tree for row transport.
  plan_.class_of.assign(nv, kNone);
  std::vector<std::uint32_t> parent(nv, kNone), parent_gen(nv, kNone);
  std::vector<std::uint32_t> bfs;
  bfs.reserve(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    if (plan_.class_of[v] != kNone) continue;
    const auto k = static_cast<std::uint32_t>(plan_.reps.size());
    plan_.reps.push_back(v);
    plan_.class_of[v] = k;
    const std::size_t head = bfs.size();
    bfs.push_back(static_cast<std::uint32_t>(v));
    for (std::size_t h = head; h < bfs.size(); ++h)
      for (std::size_t s = 0; s < gen_perms.size(); ++s) {
        const std::uint32_t w = gen_perms[s][bfs[h]];
        if (plan_.class_of[w] != kNone) continue;
        plan_.class_of[w] = k;
        parent[w] = bfs[h];
        parent_gen[w] = static_cast<std::uint32_t>(s);
        bfs.push_back(w);
      }
    plan_.class_size.push_back(bfs.size() - head);
  }

  const std::size_t nreps = plan_.reps.size();
  plan_.y_reps.assign(nreps, {});
  plan_.centralizer_order.assign(nreps, 0);
  std::vector<std::uint64_t> evaluated(nreps, 0);
  parallel_for(0, nreps, [&](std::size_t k) {
    const std::size_t x = plan_.reps[k];
    const PermGroup c = perm::centralizer(g_, generator(x), table_->size());
    plan_.centralizer_order[k] = c.order();
    std::vector<std::uint32_t> uf(nv);
    std::iota(uf.begin(), uf.end(), 0u);
    for (const auto& h : c.generators()) {
      if (h.is_identity()) continue;
      const auto hp = vertex_permutation(table_->index_of(h));
      for (std::uint32_t v = 0; v < nv; ++v) {
        const std::uint32_t a = find_root(uf, v), b = find_root(uf, hp[v]);
        if (a != b) uf[std::max(a, b)] = std::min(a, b);
      }
    }
    // Roots are the least members of their orbits.
    std::vector<char> adjacent_root(nv, 0);
    for (std::uint32_t v = 0; v < nv; ++v) {
      if (find_root(uf, v) != v) continue;
      plan_.y_reps[k].push_back(v);
      if (v == x) continue;
      if ((v & 63) == 0) deadline.check("adjacency evaluation");
      adjacent_root[v] = vertex_pair_adjacent(x, v);
      ++evaluated[k];
    }
    Bitset& row = rows_[x];
    for (std::uint32_t v = 0; v < nv; ++v)
      if (adjacent_root[find_root(uf, v)]) row.set(v);
  });
  for (auto e : evaluated) stats_.pairs_evaluated += e;

  for (std::size_t i = 0; i < bfs.size(); ++i) {
    const std::uint32_t v = bfs[i];
    if (parent[v] == kNone) continue;
    if ((i & 1023) == 0) deadline.check("adjacency transport");
    const auto& pi = gen_perms[parent_gen[v]];
    Bitset& row = rows_[v];
    rows_[parent[v]].for_each([&](std::size_t w) { row.set(pi[w]); });
  }
}

void QuotientGraph::build_all_pairs(const Deadline& deadline) {
  const std::size_t nv = canon_.size();
  // Plan classes are still recorded so the diameter step can use X'.
  plan_.class_of.assign(nv, kNone);
  std::vector<std::vector<std::uint32_t>> gen_perms;
  for (const auto& s : g_.generators())
    if (!s.is_identity()) gen_perms.push_back(vertex_permutation(table_->index_of(s)));
  for (std::size_t v = 0; v < nv; ++v) {
    if (plan_.class_of[v] != kNone) continue;
    const auto k = static_cast<std::uint32_t>(plan_.reps.size());
    plan_.reps.push_back(v);
    plan_.class_of[v] = k;
    std::vector<std::uint32_t> queue{static_cast<std::uint32_t>(v)};
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (const auto& pi : gen_perms) {
        const std::uint32_t w = pi[queue[h]];
        if (plan_.class_of[w] == kNone) {
          plan_.class_of[w] = k;
          queue.push_back(w);
        }
      }
    plan_.class_size.push_back(queue.size());
  }

  parallel_for(0, nv, [&](std::size_t u) {
    deadline.check("adjacency evaluation");
    for (std::size_t v = u + 1; v < nv; ++v)
      if (vertex_pair_adjacent(u, v)) rows_[u].set(v);
  });
  stats_.pairs_evaluated = nv * (nv - 1) / 2;
  for (std::size_t u = 0; u < nv; ++u)
    rows_[u].for_each([&](std::size_t v) {
      if (v > u) rows_[v].set(u);
    });
}

std::vector<Permutation> QuotientGraph::vertex_elements(std::size_t v) const {
  std::vector<Permutation> out;
  const Permutation x = generator(v);
  Permutation p = x;
  for (std::uint64_t k = 1; k < order_[v]; ++k, p = p * x)
    if (std::gcd(k, order_[v]) == 1) out.push_back(p);
  return out;
}

std::optional<std::size_t> QuotientGraph::vertex_of(const Permutation& x) const {
  if (x.degree() != g_.degree()) return std::nullopt;
  const std::size_t i = table_->index_of(x);
  if (i == perm::ElementTable::npos || vertex_of_[i] == kNone) return std::nullopt;
  return vertex_of_[i];
}

bool QuotientGraph::element_adjacent(const Permutation& x, const Permutation& y) const {
  if (!vertex_of(x) || !vertex_of(y)) throw std::invalid_argument("element is not a vertex of the graph");
  if (kind_ == GraphKind::nc && x * y == y * x) return false;
  return !gen_->generates(x, y);
}

std::uint64_t QuotientGraph::quotient_edge_count() const {
  std::uint64_t twice = 0;
  for (const auto& r : rows_) twice += r.count();
  return twice / 2;
}

std::uint64_t QuotientGraph::element_edge_count() const {
  // Rows of conjugate vertices are images of each other, so one row per
  // class suffices when the plan classes are known.
  std::uint64_t twice = 0;
  for (std::size_t k = 0; k < plan_.reps.size(); ++k) {
    const std::size_t x = plan_.reps[k];
    std::uint64_t s = 0;
    rows_[x].for_each([&](std::size_t w) { s += size_[w]; });
    twice += plan_.class_size[k] * size_[x] * s;
  }
  std::uint64_t loops = 0;
  loops_.for_each([&](std::size_t v) { loops += size_[v] * (size_[v] - 1) / 2; });
  return twice / 2 + loops;
}

}  // namespace ncg::graph
