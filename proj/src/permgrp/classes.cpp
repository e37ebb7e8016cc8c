#include "ncg/classes.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "ncg/element_table.hpp"
#include "ncg/errors.hpp"
#include "ncg/finfield.hpp"

namespace ncg::perm {

namespace {

void require_cap(const PermGroup& g, std::uint64_t cap) {
  if (g.order() > cap) throw CapExceeded("group order " + std::to_string(g.order()) + " exceeds cap " + std::to_string(cap));
}

// A group generated by a greedy subset of the given elements.
PermGroup group_from_elements(const PermGroup& parent, const std::vector<Permutation>& elements) {
  StabChain::Options opt;
  opt.base_hint = parent.base();
  StabChain c(parent.degree(), {}, opt);
  std::vector<Permutation> gens;
  for (const auto& e : elements)
    if (c.extend(e)) gens.push_back(e);
  return PermGroup(parent.degree(), gens);
}

}  // namespace

ClassData conjugacy_classes(const PermGroup& g, std::uint64_t cap) {
  require_cap(g, cap);
  ElementTable t(g, cap);
  std::vector<std::size_t> gens;
  for (const auto& s : g.generators())
    if (!s.is_identity()) gens.push_back(t.index_of(s));
  constexpr std::uint32_t unset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> cls(t.size(), unset);
  struct Raw {
    std::size_t rep;
    std::uint64_t size;
  };
  std::vector<Raw> raw;
  auto lex_less = [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(t.images(a), t.images(a) + t.degree(), t.images(b), t.images(b) + t.degree());
  };
  std::vector<std::size_t> queue;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (cls[i] != unset) continue;
    const auto id = static_cast<std::uint32_t>(raw.size());
    queue.assign(1, i);
    cls[i] = id;
    std::size_t rep = i;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const std::size_t m = queue[h];
      if (lex_less(m, rep)) rep = m;
      for (std::size_t s : gens) {
        const std::size_t c = t.conjugate(m, s);
        if (cls[c] == unset) {
          cls[c] = id;
          queue.push_back(c);
        }
      }
    }
    raw.push_back({rep, queue.size()});
  }

  std::vector<std::size_t> order(raw.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::uint64_t> elem_order(raw.size());
  for (std::size_t c = 0; c < raw.size(); ++c) elem_order[c] = t.element_order(raw[c].rep);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (elem_order[a] != elem_order[b]) return elem_order[a] < elem_order[b];
    return lex_less(raw[a].rep, raw[b].rep);
  });
  std::vector<std::size_t> new_id(raw.size());
  ClassData out;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto& r = raw[order[k]];
    new_id[order[k]] = k;
    out.classes.push_back({t.element(r.rep), r.size, t.size() / r.size, elem_order[order[k]]});
  }
  for (auto p : ff::prime_factors(t.size())) {
    std::vector<std::size_t> map(out.classes.size());
    for (std::size_t k = 0; k < out.classes.size(); ++k) {
      Permutation pw = out.classes[k].rep.pow(static_cast<std::int64_t>(p));
      map[k] = new_id[cls[t.index_of(pw)]];
    }
    out.power_maps[p] = std::move(map);
  }
  return out;
}

std::uint64_t class_size(const PermGroup& g, const Permutation& x, std::uint64_t cap) {
  std::unordered_set<Permutation, PermutationHash> seen{x};
  std::vector<Permutation> list{x};
  for (std::size_t h = 0; h < list.size(); ++h)
    for (const auto& s : g.generators()) {
      Permutation c = conjugate(list[h], s);
      if (seen.insert(c).second) {
        list.push_back(std::move(c));
        if (list.size() > cap) throw CapExceeded("conjugacy class exceeds cap");
      }
    }
  return list.size();
}

PermGroup centralizer(const PermGroup& g, const Permutation& x, std::uint64_t cap, CentralizerMethod method) {
  if (!g.contains(x)) throw std::invalid_argument("element is not in the group");
  require_cap(g, cap);
  if (method == CentralizerMethod::automatic)
    method = g.order() <= 100'000 ? CentralizerMethod::enumeration : CentralizerMethod::orbit;

  if (method == CentralizerMethod::enumeration) {
    ElementTable t(g, cap);
    std::vector<Permutation> commuting;
    if (!x.is_identity()) commuting.push_back(x);
    for (std::size_t i = 0; i < t.size(); ++i) {
      Permutation e = t.element(i);
      if (e * x == x * e) commuting.push_back(std::move(e));
    }
    return group_from_elements(g, commuting);
  }

  std::unordered_map<Permutation, std::size_t, PermutationHash> index{{x, 0}};
  std::vector<Permutation> members{x};
  std::vector<Permutation> trans{g.identity()};
  for (std::size_t h = 0; h < members.size(); ++h)
    for (const auto& s : g.generators()) {
      Permutation c = conjugate(members[h], s);
      if (index.emplace(c, members.size()).second) {
        members.push_back(std::move(c));
        trans.push_back(trans[h] * s);
      }
    }
  const std::uint64_t target = g.order() / members.size();
  StabChain::Options opt;
  opt.base_hint = g.base();
  opt.target_order = target;
  std::vector<Permutation> gens;
  if (!x.is_identity()) gens.push_back(x);
  StabChain c(g.degree(), gens, opt);
  for (std::size_t h = 0; h < members.size() && c.order() < target; ++h)
    for (const auto& s : g.generators()) {
      if (c.order() >= target) break;
      const std::size_t d = index.at(conjugate(members[h], s));
      Permutation sg = trans[h] * s * trans[d].inverse();
      if (c.extend(sg)) gens.push_back(sg);
    }
  if (c.order() != target) throw std::logic_error("centralizer construction did not reach the expected order");
  return PermGroup(g.degree(), gens);
}

std::vector<Permutation> group_elements(const PermGroup& g, std::uint64_t cap) {
  ElementTable t(g, cap);
  std::vector<Permutation> out;
  out.reserve(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) out.push_back(t.element(i));
  return out;
}

PermGroup center(const PermGroup& g, std::uint64_t cap) {
  require_cap(g, cap);
  std::vector<Permutation> gens;
  for (const auto& s : g.generators())
    if (!s.is_identity()) gens.push_back(s);
  if (gens.empty()) return PermGroup(g.degree(), {});
  PermGroup c = centralizer(g, gens.front(), cap);
  std::vector<Permutation> central;
  for (auto& e : group_elements(c, cap)) {
    bool ok = true;
    for (const auto& s : gens)
      if (!(e * s == s * e)) {
        ok = false;
        break;
      }
    if (ok) central.push_back(std::move(e));
  }
  return group_from_elements(g, central);
}

}  // namespace ncg::perm
