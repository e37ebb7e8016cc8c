#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ncg/bitset.hpp"
#include "ncg/deadline.hpp"
#include "ncg/element_table.hpp"
#include "ncg/permgroup.hpp"

namespace ncg::graph {

using perm::Permutation;
using perm::PermGroup;

enum class GraphKind { nc, nongen, intersection };

std::string_view to_string(GraphKind k);
// "nc", "nongen" or "intersection"; throws ParseError.
GraphKind parse_graph_kind(std::string_view s);

// Decides <x, y> = G for a fixed G, reusing its orbit count, base and order.
class GenerationTest {
 public:
  explicit GenerationTest(const PermGroup& g);

  bool generates(const Permutation& x, const Permutation& y) const;
  // <gens> = G
  bool generates(const std::vector<Permutation>& gens) const;
  std::uint64_t calls() const { return calls_.load(std::memory_order_relaxed); }

 private:
  std::size_t degree_;
  std::size_t orbits_;
  std::vector<perm::Point> base_;
  std::uint64_t order_;
  mutable std::atomic<std::uint64_t> calls_{0};
};

// x commutes with every generator of G.
bool is_central(const PermGroup& g, const Permutation& x);

// [x, y] != 1 and <x, y> != G.  Throws std::invalid_argument unless x and y
// are non-central elements of G.
bool nc_adjacent(const PermGroup& g, const Permutation& x, const Permutation& y);
// <x, y> != G.  Throws std::invalid_argument unless x and y are non-identity
// elements of G.
bool nongen_adjacent(const PermGroup& g, const Permutation& x, const Permutation& y);

// X: one canonical generator per vertex (all vertices); X': representatives
// of the vertices up to conjugacy; Y_x: representatives of the vertices up to
// conjugacy in C_G(x), for each x in X'.
struct ReductionPlan {
  std::vector<std::size_t> reps;               // X', ascending vertex ids
  std::vector<std::uint32_t> class_of;         // vertex -> index into reps
  std::vector<std::size_t> class_size;         // vertices conjugate to reps[k]
  std::vector<std::vector<std::size_t>> y_reps;  // Y_x for x = reps[k]
  std::vector<std::uint64_t> centralizer_order;  // |C_G(x)| for x = reps[k]
};

struct BuildOptions {
  std::uint64_t max_order = 10'000'000;
  std::size_t max_vertices = 100'000;
  // Evaluate adjacency only between X' and Y_x and transport rows by
  // conjugation; otherwise test every vertex pair directly.
  bool use_plan = true;
  Deadline deadline;
};

struct BuildStats {
  std::uint64_t generation_tests = 0;
  std::uint64_t commuting_pairs = 0;
  std::uint64_t pairs_evaluated = 0;
  double seconds = 0;
};

// nc(G) or the non-generating graph with vertices that generate the same
// cyclic subgroup identified.  One vertex per non-identity cyclic subgroup
// (non-central for nc), named by its generator of least element-table index.
class QuotientGraph {
 public:
  static constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);

  // Throws CapExceeded beyond max_order or max_vertices, TimeBudgetExceeded
  // when the deadline passes, std::invalid_argument for the intersection kind.
  QuotientGraph(const PermGroup& g, GraphKind kind, const BuildOptions& opt = {});

  GraphKind kind() const { return kind_; }
  const PermGroup& group() const { return g_; }
  const perm::ElementTable& table() const { return *table_; }
  std::size_t vertex_count() const { return canon_.size(); }
  Permutation generator(std::size_t v) const { return table_->element(canon_[v]); }
  std::size_t generator_index(std::size_t v) const { return canon_[v]; }
  std::uint64_t element_order(std::size_t v) const { return order_[v]; }
  // Elements generating the vertex's cyclic subgroup.
  std::uint64_t vertex_size(std::size_t v) const { return size_[v]; }
  std::vector<Permutation> vertex_elements(std::size_t v) const;
  // Element-graph vertices: |G \ Z(G)| for nc, |G| - 1 for nongen.
  std::uint64_t element_count() const { return element_count_; }
  std::uint64_t center_order() const { return center_order_; }

  bool adjacent(std::size_t u, std::size_t v) const { return rows_[u].test(v); }
  const Bitset& row(std::size_t v) const { return rows_[v]; }
  // Two distinct elements of the vertex are adjacent (nongen with <x> != G).
  bool self_adjacent(std::size_t v) const { return loops_.test(v); }
  // Vertex containing x, or none for the identity, central elements (nc) and
  // non-members.
  std::optional<std::size_t> vertex_of(const Permutation& x) const;
  // Adjacency predicate on two elements, evaluated from scratch.
  bool element_adjacent(const Permutation& x, const Permutation& y) const;

  const ReductionPlan& plan() const { return plan_; }
  bool uses_plan() const { return use_plan_; }
  const BuildStats& stats() const { return stats_; }
  std::uint64_t quotient_edge_count() const;
  std::uint64_t element_edge_count() const;

 private:
  void assign_vertices(std::size_t max_vertices);
  std::vector<std::uint32_t> vertex_permutation(std::size_t element_index) const;
  bool vertex_pair_adjacent(std::size_t u, std::size_t v) const;
  void build_with_plan(const Deadline& deadline);
  void build_all_pairs(const Deadline& deadline);

  PermGroup g_;
  GraphKind kind_;
  bool use_plan_;
  std::unique_ptr<perm::ElementTable> table_;
  std::unique_ptr<GenerationTest> gen_;
  std::vector<std::uint32_t> vertex_of_;  // element index -> vertex or kNone
  std::vector<std::size_t> canon_;
  std::vector<std::uint64_t> order_;
  std::vector<std::uint64_t> size_;
  std::vector<Bitset> rows_;
  Bitset loops_;
  std::uint64_t element_count_ = 0;
  std::uint64_t center_order_ = 1;
  ReductionPlan plan_;
  BuildStats stats_;
  mutable std::atomic<std::uint64_t> commuting_{0};
};

// A connected component of the element graph.  Elements of an isolated
// quotient vertex without self-adjacency are separate one-element components,
// listed once with their multiplicity.
struct ComponentInfo {
  std::size_t vertices = 0;    // quotient vertices
  std::uint64_t elements = 0;  // element-graph vertices
  unsigned diameter = 0;
  std::uint64_t multiplicity = 1;
  Permutation representative;
};

struct DiameterReport {
  GraphKind kind = GraphKind::nc;
  std::string group;
  std::uint64_t group_order = 0;
  bool connected = false;
  std::optional<unsigned> diameter;  // none means infinite
  std::optional<unsigned> quotient_diameter;
  // Endpoints and a shortest path between them realising the diameter (or
  // the largest finite distance when disconnected); elements for nc and
  // nongen, subgroup labels for the intersection graph.
  std::vector<Permutation> witness_pair;
  std::vector<Permutation> witness_path;
  std::vector<std::string> witness_labels;
  std::vector<Permutation> isolated;
  std::vector<ComponentInfo> components;
  std::uint64_t vertex_count = 0;
  std::uint64_t edge_count = 0;
  std::size_t quotient_vertices = 0;
  std::uint64_t quotient_edges = 0;
  std::size_t bfs_sources = 0;
  std::uint64_t generation_tests = 0;
  std::uint64_t pairs_evaluated = 0;
  bool plan_used = false;
  double build_seconds = 0;
  double diameter_seconds = 0;
};

// Exact diameter of the element graph.  With use_plan, BFS runs from X' only;
// otherwise from every vertex.  Re-verifies the witness path with the raw
// adjacency predicate and throws std::logic_error if it fails.
DiameterReport graph_diameter(const QuotientGraph& q, bool use_plan = true, const Deadline& deadline = {});

struct PathResult {
  std::optional<unsigned> distance;  // none when in different components
  std::vector<Permutation> path;     // x, ..., y
};

// Shortest path between two element-graph vertices, re-verified.  Throws
// std::invalid_argument if x or y is not a vertex.
PathResult distance_and_path(const QuotientGraph& q, const Permutation& x, const Permutation& y);

// Quotient vertices whose elements are isolated in the element graph.
std::vector<std::size_t> isolated_vertices(const QuotientGraph& q);

// BFS distances from a quotient vertex (kNone for unreachable).
std::vector<std::uint32_t> bfs_distances(const QuotientGraph& q, std::size_t source);

}  // namespace ncg::graph
