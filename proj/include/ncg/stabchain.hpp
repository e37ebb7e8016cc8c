#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ncg/permutation.hpp"

namespace ncg::perm {

// Base and strong generating set built by deterministic Schreier-Sims, with
// explicit transversals (and their inverses) at every level.
class StabChain {
 public:
  struct Options {
    // Initial base points, used in this order before any others.
    std::vector<Point> base_hint;
    // Stop as soon as the product of basic orbit lengths reaches this value
    // (0: never).  Valid when the generated group is known to have order at
    // most target_order; the chain is then complete.
    std::uint64_t target_order = 0;
    // Cap on transversal storage in bytes; CapExceeded beyond it.
    std::size_t memory_limit = std::size_t{1} << 30;
  };

  StabChain() = default;
  StabChain(std::size_t degree, const std::vector<Permutation>& gens);
  StabChain(std::size_t degree, const std::vector<Permutation>& gens, const Options& opt);

  std::size_t degree() const { return degree_; }
  std::size_t length() const { return levels_.size(); }
  Point base_point(std::size_t level) const { return levels_[level].beta; }
  std::vector<Point> base() const;
  const std::vector<Point>& orbit(std::size_t level) const { return levels_[level].orbit; }
  std::size_t orbit_size(std::size_t level) const { return levels_[level].orbit.size(); }
  const std::vector<Permutation>& strong_generators() const { return sgens_; }
  // Product of the basic orbit lengths; CapExceeded beyond 64 bits.
  std::uint64_t order() const;

  bool contains(const Permutation& g) const;
  // Sifts g through levels from..; returns the residue and the level where
  // sifting stopped (length() if it passed every level).
  std::pair<Permutation, std::size_t> strip(const Permutation& g, std::size_t from = 0) const;
  // Orbit positions (a_0, ..., a_{k-1}) with g = u_{k-1}[a_{k-1}] ... u_0[a_0];
  // false if g is not in the group.
  bool coordinates(const Permutation& g, std::vector<std::uint32_t>& out) const;
  // Mixed-radix index sum a_l * stride[l], or -1 if the images are not a group element.
  std::int64_t index(const Point* images, const std::vector<std::uint64_t>& stride) const;
  Permutation element(const std::vector<std::uint32_t>& coords) const;
  // The transversal element u[a] mapping the base point of level to orbit(level)[a].
  Permutation transversal(std::size_t level, std::uint32_t a) const;

  // Adds g as a generator and completes the chain; false if g was already in
  // the group.
  bool extend(const Permutation& g);

 private:
  struct Level {
    Point beta = 0;
    std::vector<std::size_t> gens;
    std::vector<Point> orbit;
    std::vector<std::int32_t> pos;
    std::vector<Point> u, uinv;  // flat, orbit_size x degree
    std::size_t checked_orbit = 0, checked_gens = 0;
  };

  void add_level(Point beta);
  void add_strong_generator(const Permutation& g);
  void grow_orbit(std::size_t level, std::size_t first_new_gen);
  void complete();
  bool reached_target() const;

  std::size_t degree_ = 0;
  Options opt_;
  std::vector<Permutation> sgens_;
  std::vector<Level> levels_;
  std::size_t bytes_ = 0;
};

}  // namespace ncg::perm
