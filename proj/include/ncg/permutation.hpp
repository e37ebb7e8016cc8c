#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ncg::perm {

using Point = std::uint16_t;
inline constexpr std::size_t kMaxDegree = 65535;

// A bijection of {0, ..., degree-1}.  Points act on the right: a * b applies a
// first, so (a * b)[i] = b[a[i]].
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  // Throws std::invalid_argument unless images is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }
  // No bijectivity check; for images already known to be a permutation.
  static Permutation unchecked(std::vector<Point> images) {
    Permutation p;
    p.img_ = std::move(images);
    return p;
  }
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);
  // Disjoint-cycle notation such as "(0,1,2)(3,4)" or "(0 1 2)"; "()" is the
  // identity.  Throws ParseError.
  static Permutation parse(std::size_t degree, std::string_view text);

  std::size_t degree() const { return img_.size(); }
  const std::vector<Point>& images() const { return img_; }
  Point operator[](std::size_t i) const { return img_[i]; }

  Permutation operator*(const Permutation& o) const;
  Permutation inverse() const;
  Permutation pow(std::int64_t e) const;
  std::uint64_t order() const;
  bool is_identity() const;
  bool is_even() const;
  std::size_t fixed_points() const;
  std::vector<Point> support() const;
  // Cycles of length >= 2, each starting at its least point, sorted by it.
  std::vector<std::vector<Point>> cycles() const;
  std::size_t first_moved() const;  // degree() when identity

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator!=(const Permutation& o) const { return img_ != o.img_; }
  // Lexicographic on image vectors.
  bool operator<(const Permutation& o) const { return img_ < o.img_; }
  std::size_t hash() const;
  std::string to_string() const;

 private:
  std::vector<Point> img_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const { return p.hash(); }
};

// g^-1 x g
Permutation conjugate(const Permutation& x, const Permutation& g);
// a^-1 b^-1 a b
Permutation commutator(const Permutation& a, const Permutation& b);
// Orbits of the group generated by gens on {0, ..., degree-1}, each sorted,
// ordered by least point.
std::vector<std::vector<Point>> orbits(std::size_t degree, const std::vector<Permutation>& gens);

}  // namespace ncg::perm
