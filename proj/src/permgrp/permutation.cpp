#include "ncg/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ncg/errors.hpp"

namespace ncg::perm {

Permutation::Permutation(std::size_t degree) : img_(degree) {
  if (degree > kMaxDegree) throw std::invalid_argument("permutation degree too large");
  std::iota(img_.begin(), img_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : img_(std::move(images)) {
  if (img_.size() > kMaxDegree) throw std::invalid_argument("permutation degree too large");
  std::vector<char> seen(img_.size(), 0);
  for (Point p : img_) {
    if (p >= img_.size() || seen[p]) throw std::invalid_argument("images do not form a bijection");
    seen[p] = 1;
  }
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  Permutation r(degree);
  std::vector<char> used(degree, 0);
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= degree) throw std::invalid_argument("cycle point out of range");
      if (used[c[i]]) throw std::invalid_argument("cycles are not disjoint");
      used[c[i]] = 1;
      r.img_[c[i]] = c[(i + 1) % c.size()];
    }
  return r;
}

Permutation Permutation::parse(std::size_t degree, std::string_view text) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in permutation '" + std::string(text) + "'");
    ++i;
    std::vector<Point> cyc;
    for (;;) {
      skip();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i) throw ParseError("bad point in permutation '" + std::string(text) + "'");
      unsigned long v = std::stoul(std::string(text.substr(i, j - i)));
      if (v >= degree) throw ParseError("point " + std::to_string(v) + " out of range for degree " + std::to_string(degree));
      cyc.push_back(static_cast<Point>(v));
      i = j;
    }
    if (cyc.size() >= 2) cycles.push_back(std::move(cyc));
    skip();
  }
  try {
    return from_cycles(degree, cycles);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(e.what()) + " in '" + std::string(text) + "'");
  }
}

Permutation Permutation::operator*(const Permutation& o) const {
  if (o.degree() != degree()) throw std::invalid_argument("permutation degree mismatch");
  Permutation r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[i] = o.img_[img_[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<Point>(i);
  return r;
}

Permutation Permutation::pow(std::int64_t e) const {
  Permutation base = e < 0 ? inverse() : *this;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
  Permutation r(degree());
  while (k) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

std::uint64_t Permutation::order() const {
  std::uint64_t r = 1;
  for (const auto& c : cycles()) r = std::lcm(r, static_cast<std::uint64_t>(c.size()));
  return r;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

bool Permutation::is_even() const {
  std::size_t transpositions = 0;
  for (const auto& c : cycles()) transpositions += c.size() - 1;
  return transpositions % 2 == 0;
}

std::size_t Permutation::fixed_points() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < img_.size(); ++i) n += img_[i] == i;
  return n;
}

std::vector<Point> Permutation::support() const {
  std::vector<Point> s;
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) s.push_back(static_cast<Point>(i));
  return s;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<char> seen(img_.size(), 0);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    std::vector<Point> c;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      c.push_back(static_cast<Point>(j));
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::size_t Permutation::first_moved() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return i;
  return img_.size();
}

std::size_t Permutation::hash() const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Point p : img_) h = (h ^ p) * 0x100000001b3ull;
  return h;
}

std::string Permutation::to_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ')';
  }
  return os.str();
}

Permutation conjugate(const Permutation& x, const Permutation& g) { return g.inverse() * x * g; }

Permutation commutator(const Permutation& a, const Permutation& b) { return a.inverse() * b.inverse() * a * b; }

std::vector<std::vector<Point>> orbits(std::size_t degree, const std::vector<Permutation>& gens) {
  std::vector<int> comp(degree, -1);
  std::vector<std::vector<Point>> out;
  for (std::size_t s = 0; s < degree; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<Point> orb{static_cast<Point>(s)};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t h = 0; h < orb.size(); ++h)
      for (const auto& g : gens) {
        Point t = g[orb[h]];
        if (comp[t] < 0) {
          comp[t] = comp[s];
          orb.push_back(t);
        }
      }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

}  // namespace ncg::perm
