#pragma once

#include <optional>
#include <vector>

#include "ncg/permgroup.hpp"

namespace ncg::perm {

struct DerangementData {
  bool is_derangement = false;
  std::size_t fixed_points = 0;
  // Orbits of <x>, each sorted, ordered by least point.
  std::vector<std::vector<Point>> orbits;
};

DerangementData derangement_data(const Permutation& x);

// For x in G = A_n (natural action) a derangement with <x> intransitive,
// returns g with [x, g] != 1 and <x, g> intransitive.  With orbits
// (a1 a2 ...), (b1 b2 ...) listed by least point, g is (a1 a2)(b1 b2) when
// <x> has exactly two orbits and (a1 a2 b1) otherwise.  Throws
// std::invalid_argument when the preconditions fail, std::logic_error if the
// result does not verify.
Permutation derangement_neighbor(const PermGroup& g, const Permutation& x);

}  // namespace ncg::perm
