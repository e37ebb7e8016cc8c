#pragma once

#include <cstdint>
#include <vector>

#include "ncg/bitset.hpp"
#include "ncg/element_table.hpp"
#include "ncg/graph.hpp"

namespace ncg::graph {

// A subgroup of a tabulated group, as a set of element indices.
struct Subgroup {
  Bitset elements;
  std::vector<std::size_t> generators;  // element indices
  std::uint64_t order = 0;
};

// Closure of the given elements under multiplication.
Subgroup subgroup_closure(const perm::ElementTable& t, std::vector<std::size_t> generators);
PermGroup to_perm_group(const perm::ElementTable& t, const Subgroup& s, std::string name = {});

struct SubgroupClass {
  std::vector<Subgroup> conjugates;  // the first is the representative
  bool maximal = false;
};

// Conjugacy classes of proper nontrivial subgroups.  Representatives are
// extended by every cyclic subgroup; a class is maximal when each extension
// is the whole group.  group_generators (element indices) generate the group
// and drive the conjugation orbits.  Throws CapExceeded when more than
// max_subgroups subgroups appear.
std::vector<SubgroupClass> subgroup_classes(const perm::ElementTable& t, const std::vector<std::size_t>& group_generators,
                                            std::size_t max_subgroups = 50'000);

// Every proper nontrivial subgroup, grouped by conjugacy class.
std::vector<Subgroup> proper_subgroups(const perm::ElementTable& t, std::size_t max_subgroups = 50'000);

// Diameter of the intersection graph: proper nontrivial subgroups, adjacent
// when they meet nontrivially.
DiameterReport intersection_graph_diameter(const PermGroup& g, std::uint64_t max_order = 10'000);

struct MaximalSubgroupClass {
  PermGroup representative;
  std::uint64_t order = 0;
  std::size_t conjugates = 0;
};

// Conjugacy classes of maximal subgroups, largest first.
std::vector<MaximalSubgroupClass> maximal_subgroups(const PermGroup& g, std::uint64_t max_order = 10'000);

struct InducedDiameter {
  std::size_t vertices = 0;
  bool connected = false;
  unsigned diameter = 0;
};

// The subgraph of nc(G) induced on H \ Z(H), for a subgroup H of G, by
// element-level BFS.
InducedDiameter induced_nc_diameter(const PermGroup& g, const PermGroup& h);

}  // namespace ncg::graph
