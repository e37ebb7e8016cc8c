#pragma once

#include <cstdint>
#include <vector>

#include "ncg/permgroup.hpp"

namespace ncg::perm {

// Every element of a group in a flat array.  The index of an element is the
// mixed-radix number formed by its stabiliser-chain coordinates, so lookup is
// a sift rather than a hash probe.
class ElementTable {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  // Throws CapExceeded when |G| > cap.
  explicit ElementTable(const PermGroup& g, std::uint64_t cap = 10'000'000);

  std::size_t size() const { return size_; }
  std::size_t degree() const { return degree_; }
  const Point* images(std::size_t i) const { return &data_[i * degree_]; }
  Permutation element(std::size_t i) const;
  // npos when g is not in the group.
  std::size_t index_of(const Permutation& g) const { return index_of(g.images().data()); }
  std::size_t index_of(const Point* images) const;
  std::size_t identity_index() const { return identity_; }
  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const;
  // g^-1 x g
  std::size_t conjugate(std::size_t x, std::size_t g) const;
  std::uint64_t element_order(std::size_t a) const;

 private:
  StabChain chain_;
  std::size_t degree_ = 0;
  std::size_t size_ = 0;
  std::vector<std::uint64_t> stride_;
  std::vector<Point> data_;
  std::size_t identity_ = 0;
};

}  // namespace ncg::perm
