#include "ncg/permgroup.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "ncg/errors.hpp"

namespace ncg::perm {

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> gens, std::string name)
    : PermGroup(degree, std::move(gens), std::move(name), StabChain::Options{}) {}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> gens, std::string name,
                     const StabChain::Options& opt)
    : degree_(degree), gens_(std::move(gens)), name_(std::move(name)) {
  if (degree > kMaxDegree) throw std::invalid_argument("degree too large");
  for (const auto& g : gens_)
    if (g.degree() != degree) throw std::invalid_argument("generator degree does not match group degree");
  chain_ = std::make_shared<const StabChain>(degree, gens_, opt);
}

namespace {

std::size_t find_root(std::vector<std::uint32_t>& parent, std::size_t a) {
  while (parent[a] != a) {
    parent[a] = parent[parent[a]];
    a = parent[a];
  }
  return a;
}

}  // namespace

std::size_t orbit_count(std::size_t degree, const std::vector<Permutation>& gens) {
  std::vector<std::uint32_t> parent(degree);
  std::iota(parent.begin(), parent.end(), 0u);
  std::size_t count = degree;
  for (const auto& g : gens)
    for (std::size_t i = 0; i < degree; ++i) {
      std::size_t a = find_root(parent, i), b = find_root(parent, g[i]);
      if (a != b) {
        parent[a] = static_cast<std::uint32_t>(b);
        --count;
      }
    }
  return count;
}

bool generates_unchecked(const PermGroup& g, const Permutation& x, const Permutation& y) {
  const std::uint64_t target = g.order();
  if (target == 1) return true;
  if (orbit_count(g.degree(), {x, y}) != orbit_count(g.degree(), g.generators())) return false;
  StabChain::Options opt;
  opt.base_hint = g.base();
  opt.target_order = target;
  StabChain h(g.degree(), {x, y}, opt);
  return h.order() >= target;
}

bool generates_group(const PermGroup& g, const Permutation& x, const Permutation& y) {
  if (!g.contains(x) || !g.contains(y)) throw std::invalid_argument("element is not in the group");
  return generates_unchecked(g, x, y);
}

std::uint64_t closure_order(std::size_t degree, const std::vector<Permutation>& gens, std::uint64_t cap) {
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> list{Permutation::identity(degree)};
  seen.insert(list.front());
  for (std::size_t h = 0; h < list.size(); ++h)
    for (const auto& s : gens) {
      Permutation p = list[h] * s;
      if (seen.insert(p).second) {
        list.push_back(std::move(p));
        if (list.size() > cap) throw CapExceeded("closure exceeds cap");
      }
    }
  return list.size();
}

}  // namespace ncg::perm
