#include "ncg/element_table.hpp"

#include "ncg/errors.hpp"

namespace ncg::perm {

ElementTable::ElementTable(const PermGroup& g, std::uint64_t cap) : chain_(g.chain()), degree_(g.degree()) {
  const std::uint64_t order = g.order();
  if (order > cap) throw CapExceeded("group order " + std::to_string(order) + " exceeds element-table cap " + std::to_string(cap));
  size_ = order;
  const std::size_t k = chain_.length();
  stride_.assign(k, 1);
  for (std::size_t l = 1; l < k; ++l) stride_[l] = stride_[l - 1] * chain_.orbit_size(l - 1);
  data_.resize(size_ * degree_);

  // Elements are u_{k-1}[a_{k-1}] ... u_0[a_0]; build prefix products from the
  // deepest level up.
  std::vector<std::vector<Point>> prefix(k + 1, std::vector<Point>(degree_));
  for (std::size_t i = 0; i < degree_; ++i) prefix[k][i] = static_cast<Point>(i);
  std::vector<std::vector<Permutation>> trans(k);
  for (std::size_t l = 0; l < k; ++l)
    for (std::uint32_t a = 0; a < chain_.orbit_size(l); ++a) trans[l].push_back(chain_.transversal(l, a));
  std::vector<std::uint32_t> coords(k, 0);
  auto rec = [&](auto&& self, std::size_t level, std::uint64_t index) -> void {
    if (level == 0) {
      std::copy(prefix[0].begin(), prefix[0].end(), data_.begin() + static_cast<std::ptrdiff_t>(index * degree_));
      return;
    }
    const std::size_t l = level - 1;
    for (std::uint32_t a = 0; a < chain_.orbit_size(l); ++a) {
      const auto& u = trans[l][a];
      for (std::size_t i = 0; i < degree_; ++i) prefix[l][i] = u[prefix[l + 1][i]];
      self(self, l, index + a * stride_[l]);
    }
  };
  rec(rec, k, 0);
  identity_ = 0;
}

Permutation ElementTable::element(std::size_t i) const {
  return Permutation::unchecked(std::vector<Point>(images(i), images(i) + degree_));
}

std::size_t ElementTable::index_of(const Point* img) const {
  const std::int64_t i = chain_.index(img, stride_);
  return i < 0 ? npos : static_cast<std::size_t>(i);
}

std::size_t ElementTable::multiply(std::size_t a, std::size_t b) const {
  const Point* x = images(a);
  const Point* y = images(b);
  std::vector<Point> r(degree_);
  for (std::size_t i = 0; i < degree_; ++i) r[i] = y[x[i]];
  return index_of(r.data());
}

std::size_t ElementTable::inverse(std::size_t a) const {
  const Point* x = images(a);
  std::vector<Point> r(degree_);
  for (std::size_t i = 0; i < degree_; ++i) r[x[i]] = static_cast<Point>(i);
  return index_of(r.data());
}

std::size_t ElementTable::conjugate(std::size_t x, std::size_t g) const {
  // (g^-1 x g)[g[i]] = g[x[i]]
  const Point* xi = images(x);
  const Point* gi = images(g);
  std::vector<Point> r(degree_);
  for (std::size_t i = 0; i < degree_; ++i) r[gi[i]] = gi[xi[i]];
  return index_of(r.data());
}

std::uint64_t ElementTable::element_order(std::size_t a) const { return element(a).order(); }

}  // namespace ncg::perm
