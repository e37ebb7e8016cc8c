#include "ncg/families.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "ncg/classical.hpp"
#include "ncg/errors.hpp"
#include "ncg/finfield.hpp"
#include "ncg/unitary.hpp"

namespace ncg::perm {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t e = s.find(sep, start);
    out.push_back(s.substr(start, e == std::string_view::npos ? std::string_view::npos : e - start));
    if (e == std::string_view::npos) return out;
    start = e + 1;
  }
}

std::uint64_t parse_uint(std::string_view s, std::string_view context) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size())
    throw ParseError("expected a non-negative integer in '" + std::string(context) + "', got '" + std::string(s) + "'");
  return v;
}

std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 2; i <= n; ++i)
    if (__builtin_mul_overflow(r, i, &r)) throw CapExceeded("factorial exceeds 64 bits");
  return r;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i)
    if (__builtin_mul_overflow(r, b, &r)) throw CapExceeded("power exceeds 64 bits");
  return r;
}

bool is_prime_power(std::uint64_t q) {
  try {
    ff::prime_power(q);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

std::uint64_t projective_degree(unsigned n, std::uint64_t q) { return (ipow(q, n) - 1) / (q - 1); }

// Number of singular points of the unitary space of dimension n over GF(q^2).
std::uint64_t isotropic_degree(unsigned n, std::uint64_t q) {
  const auto a = static_cast<std::int64_t>(ipow(q, n)) - (n % 2 == 0 ? 1 : -1);
  const auto b = static_cast<std::int64_t>(ipow(q, n - 1)) - (n % 2 == 1 ? 1 : -1);
  return static_cast<std::uint64_t>(a * b) / (q * q - 1);
}

std::uint64_t family_degree(const GroupSpec& s) {
  const auto& p = s.params;
  if (s.family == "alt" || s.family == "sym") return p[0];
  if (s.family == "psl" || s.family == "pgl") return projective_degree(static_cast<unsigned>(p[0]), p[1]);
  if (s.family == "psu") return isotropic_degree(static_cast<unsigned>(p[0]), p[1]);
  if (s.family == "mathieu") return p[0];
  return 0;
}

void validate(const GroupSpec& s) {
  const auto& p = s.params;
  auto fail = [&](const std::string& why) { throw Unsupported(s.to_string() + ": " + why); };
  if (s.family == "alt" || s.family == "sym") {
    if (p[0] < 1) fail("degree must be positive");
    if (p[0] > kMaxFamilyDegree) throw CapExceeded(s.to_string() + ": degree exceeds " + std::to_string(kMaxFamilyDegree));
  } else if (s.family == "psl" || s.family == "pgl" || s.family == "psu") {
    if (p[0] < 2 || p[0] > 64) fail("dimension must be at least 2");
    if (!is_prime_power(p[1])) fail("q must be a prime power");
    const std::uint64_t field_order = s.family == "psu" ? p[1] * p[1] : p[1];
    if (field_order > ff::Field::kMaxOrder) throw CapExceeded(s.to_string() + ": field too large");
    if (s.family == "psu" && p[0] == 2 && p[1] == 2) fail("PSU(2,2) is solvable and not supported");
  } else if (s.family == "mathieu") {
    if (p[0] != 11 && p[0] != 12 && p[0] != 22 && p[0] != 23) fail("Mathieu degree must be 11, 12, 22 or 23");
  } else if (s.family != "file") {
    fail("unknown family");
  }
}

void check_caps(const GroupSpec& s) {
  std::uint64_t degree = 0, order = 0;
  try {
    degree = family_degree(s);
    order = *expected_order(s);
  } catch (const std::overflow_error&) {
    throw CapExceeded(s.to_string() + ": order exceeds 64 bits");
  }
  if (degree > kMaxFamilyDegree)
    throw CapExceeded(s.to_string() + ": degree " + std::to_string(degree) + " exceeds " + std::to_string(kMaxFamilyDegree));
  if (order > kMaxFamilyOrder)
    throw CapExceeded(s.to_string() + ": order " + std::to_string(order) + " exceeds " + std::to_string(kMaxFamilyOrder));
}

// Point permutations induced by matrices on normalized vectors.
class PointAction {
 public:
  PointAction(const ff::Field& f, std::vector<mat::Vec> points) : f_(f), points_(std::move(points)) {
    if (points_.size() > kMaxDegree) throw CapExceeded("too many points");
    for (std::size_t i = 0; i < points_.size(); ++i) index_.emplace(key(points_[i]), static_cast<Point>(i));
  }

  std::size_t degree() const { return points_.size(); }

  Permutation operator()(const mat::Matrix& a) const {
    std::vector<Point> img(points_.size());
    for (std::size_t i = 0; i < points_.size(); ++i) {
      auto it = index_.find(key(mat::normalize_projective(f_, mat::times(points_[i], a))));
      if (it == index_.end()) throw std::logic_error("matrix does not preserve the point set");
      img[i] = it->second;
    }
    return Permutation(std::move(img));
  }

 private:
  std::uint64_t key(const mat::Vec& v) const {
    std::uint64_t k = 0;
    for (auto c : v) k = k * f_.q() + c;
    return k;
  }

  const ff::Field& f_;
  std::vector<mat::Vec> points_;
  std::unordered_map<std::uint64_t, Point> index_;
};

// Replaces a generating list by two random words in it when such a pair already
// generates a group of the target order; otherwise keeps the list.
std::vector<Permutation> two_generators(std::size_t degree, std::vector<Permutation> gens, std::uint64_t target,
                                        std::uint64_t seed) {
  std::vector<Permutation> nontrivial;
  for (auto& g : gens)
    if (!g.is_identity()) nontrivial.push_back(std::move(g));
  if (nontrivial.size() <= 2) return nontrivial;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, nontrivial.size() - 1);
  auto word = [&] {
    Permutation w = nontrivial[pick(rng)];
    for (int i = 1; i < 20; ++i) w = w * nontrivial[pick(rng)];
    return w;
  };
  StabChain::Options opt;
  opt.target_order = target;
  for (int attempt = 0; attempt < 64; ++attempt) {
    Permutation a = word(), b = word();
    if (orbit_count(degree, {a, b}) != 1) continue;
    if (StabChain(degree, {a, b}, opt).order() == target) return {a, b};
  }
  return nontrivial;
}

PermGroup checked(PermGroup g, std::uint64_t expected) {
  if (g.order() != expected)
    throw std::logic_error(g.name() + ": constructed order " + std::to_string(g.order()) + " differs from " +
                           std::to_string(expected));
  return g;
}

Permutation cycles_1based(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  std::vector<std::vector<Point>> z = cycles;
  for (auto& c : z)
    for (auto& x : c) --x;
  return Permutation::from_cycles(degree, z);
}

std::vector<Point> range1(Point a, Point b) {
  std::vector<Point> r;
  for (Point i = a; i <= b; ++i) r.push_back(i);
  return r;
}

}  // namespace

std::string GroupSpec::to_string() const {
  if (family == "file") return "file:" + path;
  std::string s = family;
  for (auto p : params) s += ":" + std::to_string(p);
  return s;
}

std::string GroupSpec::display_name() const {
  auto P = [&](std::size_t i) { return std::to_string(params.at(i)); };
  if (family == "alt") return "A" + P(0);
  if (family == "sym") return "S" + P(0);
  if (family == "psl") return "PSL(" + P(0) + "," + P(1) + ")";
  if (family == "pgl") return "PGL(" + P(0) + "," + P(1) + ")";
  if (family == "psu") return "PSU(" + P(0) + "," + P(1) + ")";
  if (family == "mathieu") return "M" + P(0);
  return path;
}

GroupSpec parse_group_spec(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos || colon == 0)
    throw ParseError("group descriptor '" + std::string(text) + "' must look like family:params");
  std::string family(text.substr(0, colon));
  const std::string_view rest = text.substr(colon + 1);
  if (family == "alternating") family = "alt";
  if (family == "symmetric") family = "sym";
  if (family == "from_file") family = "file";
  GroupSpec s;
  s.family = family;
  if (family == "file") {
    if (rest.empty()) throw ParseError("file descriptor needs a path");
    s.path = std::string(rest);
    return s;
  }
  std::size_t arity = 0;
  if (family == "alt" || family == "sym" || family == "mathieu") arity = 1;
  else if (family == "psl" || family == "pgl" || family == "psu") arity = 2;
  else throw Unsupported("unknown group family '" + family + "'");
  const auto parts = split(rest, ':');
  if (parts.size() != arity)
    throw ParseError("'" + std::string(text) + "': " + family + " takes " + std::to_string(arity) + " parameter(s)");
  for (auto p : parts) s.params.push_back(parse_uint(p, text));
  return s;
}

std::optional<std::uint64_t> expected_order(const GroupSpec& s) {
  const auto& p = s.params;
  if (s.family == "alt") return p[0] < 2 ? 1 : factorial(p[0]) / 2;
  if (s.family == "sym") return factorial(p[0]);
  if (s.family == "psl") return mat::order_psl(static_cast<unsigned>(p[0]), p[1]);
  if (s.family == "pgl") return mat::order_pgl(static_cast<unsigned>(p[0]), p[1]);
  if (s.family == "psu") return mat::order_psu(static_cast<unsigned>(p[0]), p[1]);
  if (s.family == "mathieu") {
    switch (p[0]) {
      case 11: return 7'920;
      case 12: return 95'040;
      case 22: return 443'520;
      case 23: return 10'200'960;
      default: break;
    }
  }
  return std::nullopt;
}

PermGroup make_group(const GroupSpec& s) {
  validate(s);
  if (s.family == "file") return read_group_file(s.path);
  check_caps(s);
  const auto n = static_cast<unsigned>(s.params[0]);
  PermGroup g;
  if (s.family == "alt") g = alternating_group(n);
  else if (s.family == "sym") g = symmetric_group(n);
  else if (s.family == "psl") g = psl_group(n, s.params[1]);
  else if (s.family == "pgl") g = pgl_group(n, s.params[1]);
  else if (s.family == "psu") g = psu_group(n, s.params[1]);
  else g = mathieu_group(n);
  return checked(std::move(g), *expected_order(s));
}

PermGroup alternating_group(unsigned n) {
  const std::string name = "A" + std::to_string(n);
  if (n < 3) return PermGroup(n, {}, name);
  std::vector<Permutation> gens{Permutation::from_cycles(n, {{0, 1, 2}})};
  if (n > 3) gens.push_back(Permutation::from_cycles(n, {n % 2 == 1 ? range1(0, static_cast<Point>(n - 1))
                                                                       : range1(1, static_cast<Point>(n - 1))}));
  return PermGroup(n, std::move(gens), name);
}

PermGroup symmetric_group(unsigned n) {
  const std::string name = "S" + std::to_string(n);
  if (n < 2) return PermGroup(n, {}, name);
  std::vector<Permutation> gens{Permutation::from_cycles(n, {{0, 1}})};
  if (n > 2) gens.push_back(Permutation::from_cycles(n, {range1(0, static_cast<Point>(n - 1))}));
  return PermGroup(n, std::move(gens), name);
}

PermGroup psl_group(unsigned n, std::uint64_t q) {
  const auto f = mat::field_of_order(q);
  PointAction act(*f, mat::projective_points(f, n));
  std::vector<Permutation> gens;
  for (const auto& m : mat::special_linear_generators(f, n)) gens.push_back(act(m));
  const std::uint64_t order = mat::order_psl(n, q);
  return PermGroup(act.degree(), two_generators(act.degree(), std::move(gens), order, q * 1000 + n),
                   "PSL(" + std::to_string(n) + "," + std::to_string(q) + ")");
}

PermGroup pgl_group(unsigned n, std::uint64_t q) {
  const auto f = mat::field_of_order(q);
  PointAction act(*f, mat::projective_points(f, n));
  std::vector<Permutation> gens;
  for (const auto& m : mat::general_linear_generators(f, n)) gens.push_back(act(m));
  const std::uint64_t order = mat::order_pgl(n, q);
  return PermGroup(act.degree(), two_generators(act.degree(), std::move(gens), order, q * 1000 + n + 500),
                   "PGL(" + std::to_string(n) + "," + std::to_string(q) + ")");
}

PermGroup psu_group(unsigned n, std::uint64_t q) {
  const mat::UnitarySpace space(n, static_cast<std::uint32_t>(q));
  PointAction act(*space.field(), mat::isotropic_points(space));
  const std::uint64_t target = mat::order_psu(n, q);
  const std::string name = "PSU(" + std::to_string(n) + "," + std::to_string(q) + ")";
  std::mt19937_64 rng(q * 1000 + n);
  StabChain::Options opt;
  opt.target_order = target;
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Permutation> pair{act(mat::random_special_unitary(space, rng)), act(mat::random_special_unitary(space, rng))};
    if (orbit_count(act.degree(), pair) != 1) continue;
    if (StabChain(act.degree(), pair, opt).order() == target) return PermGroup(act.degree(), std::move(pair), name);
  }
  // Accumulate random elements until the order is reached.
  std::vector<Permutation> gens;
  StabChain c(act.degree(), {});
  for (int i = 0; i < 256 && c.order() < target; ++i) {
    Permutation g = act(mat::random_special_unitary(space, rng));
    if (c.extend(g)) gens.push_back(std::move(g));
  }
  return PermGroup(act.degree(), std::move(gens), name);
}

PermGroup mathieu_group(unsigned m) {
  // Standard generators (1-based cycle notation), cf. the ATLAS of Finite Group
  // Representations permutation representations.
  if (m == 11 || m == 12) {
    std::vector<Permutation> gens{cycles_1based(m, {range1(1, 11)}),
                                  cycles_1based(m, {{3, 7, 11, 8}, {4, 10, 5, 6}})};
    if (m == 12) gens.push_back(cycles_1based(m, {{1, 12}, {2, 11}, {3, 6}, {4, 8}, {5, 9}, {7, 10}}));
    return PermGroup(m, std::move(gens), "M" + std::to_string(m));
  }
  if (m == 22) {
    std::vector<Permutation> gens{
        cycles_1based(22, {range1(1, 11), range1(12, 22)}),
        cycles_1based(22, {{1, 4, 5, 9, 3}, {2, 8, 10, 7, 6}, {12, 15, 16, 20, 14}, {13, 19, 21, 18, 17}}),
        cycles_1based(22, {{1, 21}, {2, 10, 8, 6}, {3, 13, 4, 17}, {5, 19, 9, 18}, {11, 22}, {12, 14, 16, 20}})};
    return PermGroup(22, std::move(gens), "M22");
  }
  if (m == 23) {
    std::vector<Permutation> gens{
        cycles_1based(23, {range1(1, 23)}),
        cycles_1based(23, {{3, 17, 10, 7, 9}, {4, 13, 14, 19, 5}, {8, 18, 11, 12, 23}, {15, 20, 22, 21, 16}})};
    return PermGroup(23, std::move(gens), "M23");
  }
  throw Unsupported("Mathieu degree must be 11, 12, 22 or 23");
}

PermGroup read_group(std::istream& in, const std::string& name) {
  std::string line;
  std::size_t lineno = 0;
  std::optional<std::size_t> degree;
  std::vector<Permutation> gens;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    const std::string_view body = std::string_view(line).substr(first, last - first + 1);
    const std::string where = name + ":" + std::to_string(lineno) + ": ";
    if (!degree) {
      std::istringstream hs{std::string(body)};
      std::string word, extra;
      std::uint64_t k = 0;
      if (!(hs >> word >> k) || word != "degree" || (hs >> extra))
        throw ParseError(where + "expected header 'degree k'");
      if (k == 0 || k > kMaxFamilyDegree) throw ParseError(where + "degree out of range");
      degree = k;
      continue;
    }
    try {
      gens.push_back(Permutation::parse(*degree, body));
    } catch (const ParseError& e) {
      throw ParseError(where + e.what());
    }
  }
  if (!degree) throw ParseError(name + ": missing header 'degree k'");
  PermGroup g(*degree, std::move(gens), name);
  if (g.order() > kMaxFamilyOrder)
    throw CapExceeded(name + ": order " + std::to_string(g.order()) + " exceeds " + std::to_string(kMaxFamilyOrder));
  return g;
}

PermGroup read_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open group file '" + path + "'");
  return read_group(in, path);
}

}  // namespace ncg::perm
