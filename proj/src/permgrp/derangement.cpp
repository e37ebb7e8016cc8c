#include "ncg/derangement.hpp"

#include <stdexcept>

namespace ncg::perm {

DerangementData derangement_data(const Permutation& x) {
  DerangementData d;
  d.fixed_points = x.fixed_points();
  d.is_derangement = x.degree() > 0 && d.fixed_points == 0;
  d.orbits = orbits(x.degree(), {x});
  return d;
}

Permutation derangement_neighbor(const PermGroup& g, const Permutation& x) {
  const std::size_t n = g.degree();
  std::uint64_t half_factorial = 1;
  for (std::uint64_t i = 3; i <= n; ++i) half_factorial *= i;
  if (n < 4 || g.order() != half_factorial) throw std::invalid_argument("group is not the alternating group on its points");
  if (!g.contains(x)) throw std::invalid_argument("element is not in the group");
  const DerangementData d = derangement_data(x);
  if (!d.is_derangement) throw std::invalid_argument("element has fixed points");
  if (d.orbits.size() < 2) throw std::invalid_argument("element generates a transitive subgroup");

  const auto& a = d.orbits[0];
  const auto& b = d.orbits[1];
  const Permutation y = d.orbits.size() == 2 ? Permutation::from_cycles(n, {{a[0], a[1]}, {b[0], b[1]}})
                                             : Permutation::from_cycles(n, {{a[0], a[1], b[0]}});
  if (commutator(x, y).is_identity()) throw std::logic_error("neighbour commutes with the element");
  if (orbit_count(n, {x, y}) < 2) throw std::logic_error("neighbour generates a transitive subgroup");
  return y;
}

}  // namespace ncg::perm
