#include <random>
#include <sstream>

#include "doctest.h"
#include "ncg/classes.hpp"
#include "ncg/derangement.hpp"
#include "ncg/element_table.hpp"
#include "ncg/errors.hpp"
#include "ncg/families.hpp"
#include "support/perm_oracles.hpp"

using namespace ncg::perm;

namespace {

std::vector<oracle::Img> images_of(const std::vector<Permutation>& gens) {
  std::vector<oracle::Img> out;
  for (const auto& g : gens) out.push_back(g.images());
  return out;
}

PermGroup named(const char* text) { return make_group(parse_group_spec(text)); }

Permutation random_element(const PermGroup& g, std::mt19937_64& rng) {
  const auto& c = g.chain();
  std::vector<std::uint32_t> coords(c.length());
  for (std::size_t l = 0; l < c.length(); ++l)
    coords[l] = std::uniform_int_distribution<std::uint32_t>(0, static_cast<std::uint32_t>(c.orbit_size(l) - 1))(rng);
  return c.element(coords);
}

}  // namespace

TEST_CASE("permutation arithmetic") {
  const auto a = Permutation::parse(5, "(0,1,2)");
  const auto b = Permutation::parse(5, "(1 3)");
  CHECK((a * b)[0] == 3);  // 0 -> 1 -> 3
  CHECK((a * a.inverse()).is_identity());
  CHECK(a.pow(3).is_identity());
  CHECK(a.pow(-1) == a.inverse());
  CHECK(a.order() == 3);
  CHECK(Permutation::parse(6, "(0,1)(2,3,4)").order() == 6);
  CHECK(a.is_even());
  CHECK_FALSE(b.is_even());
  CHECK(a.fixed_points() == 2);
  CHECK(conjugate(a, b) == b.inverse() * a * b);
  CHECK(commutator(a, b) == a.inverse() * b.inverse() * a * b);
  CHECK(Permutation::parse(5, "(3,1)(4,0,2)").to_string() == "(0,2,4)(1,3)");
  CHECK(Permutation::parse(4, "()").is_identity());
  CHECK(orbits(5, {a}) == std::vector<std::vector<Point>>{{0, 1, 2}, {3}, {4}});
  CHECK_THROWS_AS(Permutation::parse(3, "(0,3)"), ncg::ParseError);
  CHECK_THROWS_AS(Permutation::parse(3, "(0,1,0)"), ncg::ParseError);
  CHECK_THROWS_AS(Permutation::parse(3, "(0,1"), ncg::ParseError);
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0}), std::invalid_argument);
}

TEST_CASE("stabiliser chain order matches closure") {
  for (const char* text : {"alt:5", "sym:5", "alt:6", "sym:6", "alt:7", "psl:2:7", "psl:2:8", "psl:2:11", "pgl:2:7",
                           "pgl:2:9", "psl:3:2", "psl:3:3", "psu:3:3", "mathieu:11", "psl:2:16", "pgl:2:11"}) {
    CAPTURE(text);
    const PermGroup g = named(text);
    const auto elements = oracle::closure(g.degree(), images_of(g.generators()));
    CHECK(g.order() == elements.size());
    CHECK(closure_order(g.degree(), g.generators()) == elements.size());
  }
}

TEST_CASE("chain coordinates and element table") {
  const PermGroup g = named("psl:2:11");
  const auto& c = g.chain();
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const Permutation x = random_element(g, rng);
    std::vector<std::uint32_t> coords;
    REQUIRE(c.coordinates(x, coords));
    CHECK(c.element(coords) == x);
  }
  ElementTable t(g);
  REQUIRE(t.size() == 660);
  std::set<oracle::Img> distinct;
  for (std::size_t i = 0; i < t.size(); ++i) {
    distinct.insert(t.element(i).images());
    CHECK(t.index_of(t.element(i)) == i);
  }
  CHECK(distinct.size() == 660);
  CHECK(t.element(t.identity_index()).is_identity());
  for (int i = 0; i < 30; ++i) {
    const std::size_t a = rng() % t.size(), b = rng() % t.size();
    CHECK(t.element(t.multiply(a, b)) == t.element(a) * t.element(b));
    CHECK(t.element(t.inverse(a)) == t.element(a).inverse());
    CHECK(t.element(t.conjugate(a, b)) == conjugate(t.element(a), t.element(b)));
  }
  CHECK(t.index_of(Permutation::parse(12, "(0,1)")) == ElementTable::npos);
}

TEST_CASE("membership") {
  const PermGroup a7 = alternating_group(7);
  const PermGroup s7 = symmetric_group(7);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Permutation x = random_element(s7, rng);
    CHECK(a7.contains(x) == x.is_even());
  }
  const PermGroup m11 = mathieu_group(11);
  const auto elements = oracle::closure(11, images_of(m11.generators()));
  int inside = 0;
  for (int i = 0; i < 2000; ++i) {
    const Permutation x = random_element(symmetric_group(11), rng);
    const bool in = m11.contains(x);
    CHECK(in == (elements.count(x.images()) == 1));
    inside += in;
  }
  for (const auto& e : elements) CHECK(m11.contains(Permutation(e)));
  CHECK_FALSE(m11.contains(Permutation(12)));
}

TEST_CASE("extend and early exit") {
  StabChain c(6, {});
  CHECK(c.order() == 1);
  CHECK(c.extend(Permutation::parse(6, "(0,1,2,3,4,5)")));
  CHECK_FALSE(c.extend(Permutation::parse(6, "(0,2,4)(1,3,5)")));
  CHECK(c.extend(Permutation::parse(6, "(0,1)")));
  CHECK(c.order() == 720);

  StabChain::Options opt;
  opt.target_order = 360;
  StabChain partial(8, alternating_group(8).generators(), opt);
  CHECK(partial.order() >= 360);
  CHECK(partial.order() <= 20160);

  StabChain::Options tight;
  tight.memory_limit = 1000;
  CHECK_THROWS_AS(StabChain(40, symmetric_group(40).generators(), tight), ncg::CapExceeded);
}

TEST_CASE("conjugacy classes of A5 and M11") {
  const PermGroup a5 = alternating_group(5);
  const ClassData d = conjugacy_classes(a5);
  std::multiset<std::uint64_t> sizes;
  for (const auto& c : d.classes) sizes.insert(c.size);
  CHECK(sizes == std::multiset<std::uint64_t>{1, 12, 12, 15, 20});
  CHECK(sizes == oracle::class_sizes(oracle::closure(5, images_of(a5.generators()))));
  CHECK(d.classes.front().rep.is_identity());
  CHECK(d.classes.back().element_order == 5);
  // The square of a 5-cycle lies in the other class of 5-cycles.
  const auto& sq = d.power_maps.at(2);
  CHECK(sq[3] == 4);
  CHECK(sq[4] == 3);

  const PermGroup m11 = mathieu_group(11);
  const ClassData dm = conjugacy_classes(m11);
  CHECK(dm.classes.size() == 10);
  std::uint64_t total = 0;
  for (const auto& c : dm.classes) {
    total += c.size;
    CHECK(c.size * c.centralizer_order == 7920);
    CHECK(class_size(m11, c.rep) == c.size);
  }
  CHECK(total == 7920);
  std::multiset<std::uint64_t> msizes;
  for (const auto& c : dm.classes) msizes.insert(c.size);
  CHECK(msizes == oracle::class_sizes(oracle::closure(11, images_of(m11.generators()))));
}

TEST_CASE("class equation across families") {
  for (const char* text : {"sym:5", "psl:2:7", "psl:2:8", "pgl:2:7", "psl:3:3", "psu:3:3", "alt:7"}) {
    CAPTURE(text);
    const PermGroup g = named(text);
    const ClassData d = conjugacy_classes(g);
    std::uint64_t total = 0;
    for (const auto& c : d.classes) {
      total += c.size;
      CHECK(g.order() % c.size == 0);
      CHECK(c.rep.order() == c.element_order);
    }
    CHECK(total == g.order());
  }
}

TEST_CASE("centralizers") {
  const PermGroup a5 = alternating_group(5);
  const auto five = Permutation::parse(5, "(0,1,2,3,4)");
  const auto v4 = Permutation::parse(5, "(0,1)(2,3)");
  for (auto m : {CentralizerMethod::enumeration, CentralizerMethod::orbit}) {
    CHECK(centralizer(a5, five, 10'000'000, m).order() == 5);
    CHECK(centralizer(a5, v4, 10'000'000, m).order() == 4);
  }
  CHECK_THROWS_AS(centralizer(a5, Permutation::parse(5, "(0,1)")), std::invalid_argument);

  for (const char* text : {"mathieu:11", "psl:2:11", "psu:3:3", "sym:6"}) {
    CAPTURE(text);
    const PermGroup g = named(text);
    const auto elements = oracle::closure(g.degree(), images_of(g.generators()));
    for (const auto& c : conjugacy_classes(g).classes) {
      const PermGroup e = centralizer(g, c.rep, 10'000'000, CentralizerMethod::enumeration);
      const PermGroup o = centralizer(g, c.rep, 10'000'000, CentralizerMethod::orbit);
      CHECK(e.order() == c.centralizer_order);
      CHECK(o.order() == c.centralizer_order);
      CHECK(o.order() == oracle::centralizer_order(elements, c.rep.images()));
      for (const auto& s : o.generators()) CHECK(s * c.rep == c.rep * s);
    }
  }
}

TEST_CASE("centres") {
  CHECK(center(alternating_group(5)).order() == 1);
  CHECK(center(symmetric_group(5)).order() == 1);
  CHECK(center(named("psl:2:11")).order() == 1);
  const PermGroup c6(6, {Permutation::parse(6, "(0,1,2,3,4,5)")});
  CHECK(center(c6).order() == 6);
  const PermGroup d8(4, {Permutation::parse(4, "(0,1,2,3)"), Permutation::parse(4, "(0,2)")});
  const PermGroup z = center(d8);
  CHECK(z.order() == 2);
  CHECK(z.contains(Permutation::parse(4, "(0,2)(1,3)")));
}

TEST_CASE("family degrees and orders") {
  struct Row {
    const char* text;
    std::size_t degree;
    std::uint64_t order;
  };
  for (const Row& r : {Row{"alt:5", 5, 60}, Row{"sym:6", 6, 720}, Row{"psl:2:7", 8, 168}, Row{"psl:2:11", 12, 660},
                       Row{"psl:2:8", 9, 504}, Row{"pgl:2:7", 8, 336}, Row{"psl:3:2", 7, 168}, Row{"psl:3:4", 21, 20160},
                       Row{"psl:4:2", 15, 20160}, Row{"psu:3:3", 28, 6048}, Row{"psu:4:2", 45, 25920},
                       Row{"psu:3:4", 65, 62400}, Row{"mathieu:11", 11, 7920}, Row{"mathieu:12", 12, 95040},
                       Row{"mathieu:22", 22, 443520}, Row{"mathieu:23", 23, 10200960}, Row{"alt:10", 10, 1814400}}) {
    CAPTURE(r.text);
    const GroupSpec s = parse_group_spec(r.text);
    CHECK(expected_order(s) == r.order);
    const PermGroup g = make_group(s);
    CHECK(g.degree() == r.degree);
    CHECK(g.order() == r.order);
    CHECK(orbit_count(g.degree(), g.generators()) == 1);
  }
  CHECK(named("psl:2:11").generators().size() == 2);
  CHECK(named("psu:3:3").generators().size() == 2);
  CHECK(parse_group_spec("psl:2:11").display_name() == "PSL(2,11)");
  CHECK(parse_group_spec("alternating:5").to_string() == "alt:5");
  CHECK(parse_group_spec("mathieu:22").display_name() == "M22");
}

TEST_CASE("group descriptor errors") {
  CHECK_THROWS_AS(parse_group_spec("alt"), ncg::ParseError);
  CHECK_THROWS_AS(parse_group_spec("foo:3"), ncg::Unsupported);
  CHECK_THROWS_AS(parse_group_spec("psl:2"), ncg::ParseError);
  CHECK_THROWS_AS(parse_group_spec("alt:x"), ncg::ParseError);
  CHECK_THROWS_AS(parse_group_spec("alt:5:"), ncg::ParseError);
  CHECK_THROWS_AS(named("psl:2:6"), ncg::Unsupported);
  CHECK_THROWS_AS(named("mathieu:24"), ncg::Unsupported);
  CHECK_THROWS_AS(named("psl:1:5"), ncg::Unsupported);
  CHECK_THROWS_AS(named("alt:13"), ncg::CapExceeded);
  CHECK_THROWS_AS(named("psl:2:10007"), ncg::CapExceeded);
  CHECK_THROWS_AS(named("psl:5:7"), ncg::CapExceeded);
  CHECK_THROWS_AS(named("file:/nonexistent/gens.txt"), ncg::IoError);
}

TEST_CASE("group files") {
  std::istringstream ok("# A5\ndegree 5\n(0,1,2)\n\n(0 1 2 3 4)  # five-cycle\n");
  const PermGroup g = read_group(ok);
  CHECK(g.order() == 60);
  CHECK(g.degree() == 5);
  std::istringstream no_header("(0,1,2)\n");
  CHECK_THROWS_AS(read_group(no_header), ncg::ParseError);
  std::istringstream bad_point("degree 4\n(0,4)\n");
  CHECK_THROWS_AS(read_group(bad_point), ncg::ParseError);
  std::istringstream empty("");
  CHECK_THROWS_AS(read_group(empty), ncg::ParseError);
}

TEST_CASE("two-element generation against closure") {
  std::mt19937_64 rng(23);
  for (const char* text : {"alt:5", "psl:2:7", "sym:5", "psl:2:8"}) {
    CAPTURE(text);
    const PermGroup g = named(text);
    int yes = 0, no = 0;
    for (int i = 0; i < 150; ++i) {
      const Permutation x = random_element(g, rng), y = random_element(g, rng);
      const bool expect = oracle::closure(g.degree(), {x.images(), y.images()}).size() == g.order();
      CHECK(generates_group(g, x, y) == expect);
      (expect ? yes : no)++;
    }
    CHECK(yes > 0);
    CHECK(no > 0);
  }
  const PermGroup a5 = alternating_group(5);
  CHECK(generates_group(a5, Permutation::parse(5, "(0,1,2)"), Permutation::parse(5, "(0,1,2,3,4)")));
  CHECK_FALSE(generates_group(a5, Permutation::parse(5, "(0,1,2)"), Permutation::parse(5, "(0,1)(3,4)")));
  CHECK_THROWS_AS(generates_group(a5, Permutation::parse(5, "(0,1)"), Permutation::parse(5, "(0,1,2)")),
                  std::invalid_argument);
}

TEST_CASE("derangement neighbours in alternating groups") {
  const auto d = derangement_data(Permutation::parse(6, "(0,1,2)(3,4,5)"));
  CHECK(d.is_derangement);
  CHECK(d.orbits.size() == 2);
  CHECK(derangement_neighbor(alternating_group(6), Permutation::parse(6, "(0,1,2)(3,4,5)")) ==
        Permutation::parse(6, "(0,1)(3,4)"));
  CHECK(derangement_neighbor(alternating_group(7), Permutation::parse(7, "(0,1)(2,3)(4,5,6)")) ==
        Permutation::parse(7, "(0,1,2)"));
  CHECK(derangement_neighbor(alternating_group(6), Permutation::parse(6, "(0,4,2,5)(1,3)")) ==
        Permutation::parse(6, "(0,2)(1,3)"));

  for (unsigned n = 5; n <= 9; ++n) {
    CAPTURE(n);
    const PermGroup g = alternating_group(n);
    int tested = 0;
    for (const auto& c : conjugacy_classes(g).classes) {
      const auto info = derangement_data(c.rep);
      if (!info.is_derangement || info.orbits.size() < 2) {
        CHECK_THROWS_AS(derangement_neighbor(g, c.rep), std::invalid_argument);
        continue;
      }
      const Permutation y = derangement_neighbor(g, c.rep);
      CHECK(g.contains(y));
      CHECK_FALSE(commutator(c.rep, y).is_identity());
      CHECK_FALSE(generates_group(g, c.rep, y));
      ++tested;
    }
    // A5 has no intransitive even derangement.
    CHECK((tested > 0) == (n > 5));
  }
  CHECK_THROWS_AS(derangement_neighbor(symmetric_group(6), Permutation::parse(6, "(0,1,2)(3,4,5)")),
                  std::invalid_argument);
}
