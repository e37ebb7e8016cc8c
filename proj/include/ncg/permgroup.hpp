#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ncg/stabchain.hpp"

namespace ncg::perm {

// A permutation group given by generators, with its stabiliser chain built on
// construction.  Immutable and cheap to copy.
class PermGroup {
 public:
  PermGroup() = default;
  PermGroup(std::size_t degree, std::vector<Permutation> gens, std::string name = {});
  PermGroup(std::size_t degree, std::vector<Permutation> gens, std::string name, const StabChain::Options& opt);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  const std::string& name() const { return name_; }
  const StabChain& chain() const { return *chain_; }
  std::uint64_t order() const { return chain_->order(); }
  std::vector<Point> base() const { return chain_->base(); }
  bool contains(const Permutation& g) const { return chain_->contains(g); }
  Permutation identity() const { return Permutation::identity(degree_); }

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> gens_;
  std::string name_;
  std::shared_ptr<const StabChain> chain_;
};

// Number of orbits of <gens> on the points.
std::size_t orbit_count(std::size_t degree, const std::vector<Permutation>& gens);

// True iff <x, y> = G.  Throws std::invalid_argument unless x, y lie in G.
bool generates_group(const PermGroup& g, const Permutation& x, const Permutation& y);
// As generates_group, without the membership check.
bool generates_unchecked(const PermGroup& g, const Permutation& x, const Permutation& y);

// Order of <gens> by naive closure (BFS over products); CapExceeded beyond cap.
std::uint64_t closure_order(std::size_t degree, const std::vector<Permutation>& gens, std::uint64_t cap = 200'000);

}  // namespace ncg::perm
