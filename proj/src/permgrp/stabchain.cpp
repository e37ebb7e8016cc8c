#include "ncg/stabchain.hpp"

#include <algorithm>
#include <stdexcept>

#include "ncg/errors.hpp"

namespace ncg::perm {

StabChain::StabChain(std::size_t degree, const std::vector<Permutation>& gens) : StabChain(degree, gens, Options{}) {}

StabChain::StabChain(std::size_t degree, const std::vector<Permutation>& gens, const Options& opt)
    : degree_(degree), opt_(opt) {
  for (const auto& g : gens)
    if (g.degree() != degree) throw std::invalid_argument("generator degree does not match group degree");
  for (Point b : opt_.base_hint) {
    if (b >= degree) throw std::invalid_argument("base point out of range");
    bool dup = false;
    for (const auto& l : levels_) dup = dup || l.beta == b;
    if (!dup) add_level(b);
  }
  for (const auto& g : gens)
    if (!g.is_identity() && !contains(g)) add_strong_generator(g);
  complete();
}

std::vector<Point> StabChain::base() const {
  std::vector<Point> b;
  for (const auto& l : levels_) b.push_back(l.beta);
  return b;
}

std::uint64_t StabChain::order() const {
  std::uint64_t r = 1;
  for (const auto& l : levels_)
    if (__builtin_mul_overflow(r, static_cast<std::uint64_t>(l.orbit.size()), &r))
      throw CapExceeded("group order exceeds 64 bits");
  return r;
}

bool StabChain::reached_target() const {
  if (opt_.target_order == 0) return false;
  __extension__ unsigned __int128 r = 1;
  for (const auto& l : levels_) r *= l.orbit.size();
  return r >= opt_.target_order;
}

void StabChain::add_level(Point beta) {
  Level l;
  l.beta = beta;
  l.pos.assign(degree_, -1);
  l.pos[beta] = 0;
  l.orbit.push_back(beta);
  l.u.resize(degree_);
  for (std::size_t i = 0; i < degree_; ++i) l.u[i] = static_cast<Point>(i);
  l.uinv = l.u;
  bytes_ += 2 * degree_ * sizeof(Point);
  levels_.push_back(std::move(l));
}

void StabChain::grow_orbit(std::size_t level, std::size_t first_new_gen) {
  Level& L = levels_[level];
  const std::size_t n = degree_;
  std::vector<Point> row(n);
  auto try_add = [&](std::size_t a, std::size_t gi) {
    const Permutation& s = sgens_[L.gens[gi]];
    const Point c = s[L.orbit[a]];
    if (L.pos[c] >= 0) return;
    bytes_ += 2 * n * sizeof(Point);
    if (bytes_ > opt_.memory_limit) throw CapExceeded("transversal storage exceeds the memory limit");
    const Point* ub = &L.u[a * n];
    for (std::size_t i = 0; i < n; ++i) row[i] = s[ub[i]];
    L.pos[c] = static_cast<std::int32_t>(L.orbit.size());
    L.orbit.push_back(c);
    L.u.insert(L.u.end(), row.begin(), row.end());
    const std::size_t base = L.uinv.size();
    L.uinv.resize(base + n);
    for (std::size_t i = 0; i < n; ++i) L.uinv[base + row[i]] = static_cast<Point>(i);
  };
  const std::size_t old = L.orbit.size();
  for (std::size_t a = 0; a < old; ++a)
    for (std::size_t gi = first_new_gen; gi < L.gens.size(); ++gi) try_add(a, gi);
  for (std::size_t a = old; a < L.orbit.size(); ++a)
    for (std::size_t gi = 0; gi < L.gens.size(); ++gi) try_add(a, gi);
}

void StabChain::add_strong_generator(const Permutation& g) {
  bool fixes_all = true;
  for (const auto& l : levels_) fixes_all = fixes_all && g[l.beta] == l.beta;
  if (fixes_all) add_level(static_cast<Point>(g.first_moved()));
  const std::size_t idx = sgens_.size();
  sgens_.push_back(g);
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    if (l > 0 && g[levels_[l - 1].beta] != levels_[l - 1].beta) break;
    levels_[l].gens.push_back(idx);
    grow_orbit(l, levels_[l].gens.size() - 1);
  }
}

void StabChain::complete() {
  if (reached_target()) return;
  const std::size_t n = degree_;
  std::vector<Point> sg(n);
  std::ptrdiff_t l = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (l >= 0) {
    bool restarted = false;
    for (std::size_t a = 0; a < levels_[l].orbit.size() && !restarted; ++a) {
      for (std::size_t gi = 0; gi < levels_[l].gens.size(); ++gi) {
        Level& L = levels_[l];
        if (a < L.checked_orbit && gi < L.checked_gens) continue;
        const Permutation& s = sgens_[L.gens[gi]];
        const Point c = s[L.orbit[a]];
        const Point* ub = &L.u[a * n];
        const Point* uc_inv = &L.uinv[static_cast<std::size_t>(L.pos[c]) * n];
        bool identity = true;
        for (std::size_t i = 0; i < n; ++i) {
          sg[i] = uc_inv[s[ub[i]]];
          identity = identity && sg[i] == i;
        }
        if (identity) continue;
        auto [h, j] = strip(Permutation::unchecked(sg), static_cast<std::size_t>(l) + 1);
        if (h.is_identity()) continue;
        add_strong_generator(h);
        if (reached_target()) return;
        l = static_cast<std::ptrdiff_t>(std::min(j, levels_.size() - 1));
        restarted = true;
        break;
      }
    }
    if (!restarted) {
      levels_[l].checked_orbit = levels_[l].orbit.size();
      levels_[l].checked_gens = levels_[l].gens.size();
      --l;
    }
  }
}

std::pair<Permutation, std::size_t> StabChain::strip(const Permutation& g, std::size_t from) const {
  std::vector<Point> cur = g.images();
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const Level& L = levels_[l];
    const std::int32_t p = L.pos[cur[L.beta]];
    if (p < 0) return {Permutation::unchecked(std::move(cur)), l};
    const Point* inv = &L.uinv[static_cast<std::size_t>(p) * degree_];
    for (std::size_t i = 0; i < degree_; ++i) cur[i] = inv[cur[i]];
  }
  return {Permutation::unchecked(std::move(cur)), levels_.size()};
}

bool StabChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  return strip(g).first.is_identity();
}

bool StabChain::coordinates(const Permutation& g, std::vector<std::uint32_t>& out) const {
  if (g.degree() != degree_) return false;
  out.resize(levels_.size());
  std::vector<Point> cur = g.images();
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    const Level& L = levels_[l];
    const std::int32_t p = L.pos[cur[L.beta]];
    if (p < 0) return false;
    out[l] = static_cast<std::uint32_t>(p);
    const Point* inv = &L.uinv[static_cast<std::size_t>(p) * degree_];
    for (std::size_t i = 0; i < degree_; ++i) cur[i] = inv[cur[i]];
  }
  for (std::size_t i = 0; i < degree_; ++i)
    if (cur[i] != i) return false;
  return true;
}

std::int64_t StabChain::index(const Point* images, const std::vector<std::uint64_t>& stride) const {
  Point buf[256];
  std::vector<Point> big;
  Point* cur = buf;
  if (degree_ > 256) {
    big.resize(degree_);
    cur = big.data();
  }
  std::copy(images, images + degree_, cur);
  std::int64_t idx = 0;
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    const Level& L = levels_[l];
    const std::int32_t p = L.pos[cur[L.beta]];
    if (p < 0) return -1;
    idx += static_cast<std::int64_t>(p * stride[l]);
    const Point* inv = &L.uinv[static_cast<std::size_t>(p) * degree_];
    for (std::size_t i = 0; i < degree_; ++i) cur[i] = inv[cur[i]];
  }
  for (std::size_t i = 0; i < degree_; ++i)
    if (cur[i] != i) return -1;
  return idx;
}

Permutation StabChain::transversal(std::size_t level, std::uint32_t a) const {
  const Level& L = levels_.at(level);
  if (a >= L.orbit.size()) throw std::out_of_range("transversal index out of range");
  return Permutation::unchecked(std::vector<Point>(L.u.begin() + static_cast<std::ptrdiff_t>(a * degree_),
                                                   L.u.begin() + static_cast<std::ptrdiff_t>((a + 1) * degree_)));
}

Permutation StabChain::element(const std::vector<std::uint32_t>& coords) const {
  if (coords.size() != levels_.size()) throw std::invalid_argument("coordinate vector has the wrong length");
  std::vector<Point> cur(degree_);
  for (std::size_t i = 0; i < degree_; ++i) cur[i] = static_cast<Point>(i);
  for (std::size_t l = levels_.size(); l-- > 0;) {
    const Level& L = levels_[l];
    if (coords[l] >= L.orbit.size()) throw std::out_of_range("coordinate out of range");
    const Point* u = &L.u[coords[l] * degree_];
    for (std::size_t i = 0; i < degree_; ++i) cur[i] = u[cur[i]];
  }
  return Permutation::unchecked(std::move(cur));
}

bool StabChain::extend(const Permutation& g) {
  if (g.degree() != degree_) throw std::invalid_argument("generator degree does not match group degree");
  if (contains(g)) return false;
  add_strong_generator(g);
  complete();
  return true;
}

}  // namespace ncg::perm
