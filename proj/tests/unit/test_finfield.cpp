#include <random>
#include <set>

#include "doctest.h"
#include "ncg/errors.hpp"
#include "ncg/poly.hpp"
#include "support/field_oracles.hpp"

using namespace ncg::ff;

namespace {

Poly P(const FieldPtr& f, std::vector<Code> c) { return Poly(f, std::move(c)); }

// Least monic irreducible of degree k over GF(p), found by enumerating codes
// and testing with trial division over the prime field.
std::vector<Code> least_irreducible(std::uint64_t p, unsigned k) {
  auto Fp = field_make(p, 1);
  std::uint64_t count = 1;
  for (unsigned i = 0; i < k; ++i) count *= p;
  for (std::uint64_t c = 0; c < count; ++c) {
    std::vector<Code> v(k + 1);
    std::uint64_t t = c;
    for (unsigned i = 0; i < k; ++i) {
      v[i] = static_cast<Code>(t % p);
      t /= p;
    }
    v[k] = 1;
    if (*oracle::irreducible_by_trial_division(Poly(Fp, v))) return v;
  }
  return {};
}

const std::vector<std::pair<std::uint64_t, unsigned>> kSmallFields = {
    {2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 2}, {3, 3}, {2, 5}, {7, 2}, {2, 6}};

}  // namespace

TEST_CASE("field construction: examples and errors") {
  auto f2 = field_make(2, 1);
  CHECK(f2->q() == 2);
  CHECK(f2->modulus() == std::vector<Code>{0, 1});
  auto f9 = field_make(3, 2);
  CHECK(f9->q() == 9);
  CHECK(f9->modulus() == std::vector<Code>{1, 0, 1});  // x^2 + 1
  auto f7 = field_make(7, 1);
  CHECK(f7->q() == 7);
  CHECK(field_make(3, 2) == f9);  // cached, deterministic

  CHECK_THROWS_AS(field_make(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(field_make(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(field_make(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(field_make(2, 64), std::overflow_error);
  CHECK_THROWS_AS(field_make(2, 17), ncg::CapExceeded);
}

TEST_CASE("field modulus is the least monic irreducible") {
  for (auto [p, k] : kSmallFields) {
    if (k == 1) continue;
    CAPTURE(p);
    CAPTURE(k);
    CHECK(field_make(p, k)->modulus() == least_irreducible(p, k));
  }
  // Frozen from the enumeration above.
  CHECK(field_make(2, 2)->modulus() == std::vector<Code>{1, 1, 1});
  CHECK(field_make(2, 3)->modulus() == std::vector<Code>{1, 1, 0, 1});
  CHECK(field_make(2, 4)->modulus() == std::vector<Code>{1, 1, 0, 0, 1});
  CHECK(field_make(5, 2)->modulus() == std::vector<Code>{2, 0, 1});
}

TEST_CASE("table arithmetic agrees with schoolbook arithmetic") {
  for (auto [p, k] : kSmallFields) {
    auto f = field_make(p, k);
    CAPTURE(f->q());
    for (Code a = 0; a < f->q(); ++a)
      for (Code b = 0; b < f->q(); ++b) {
        REQUIRE(f->mul(a, b) == oracle::schoolbook_mul(f, a, b));
        REQUIRE(f->add(a, b) == oracle::schoolbook_add(f, a, b));
      }
  }
  std::mt19937 rng(7);
  for (auto [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{{3, 5}, {2, 10}, {5, 4}, {251, 1}, {2, 16}}) {
    auto f = field_make(p, k);
    std::uniform_int_distribution<Code> d(0, f->q() - 1);
    for (int i = 0; i < 20000; ++i) {
      Code a = d(rng), b = d(rng);
      REQUIRE(f->mul(a, b) == oracle::schoolbook_mul(f, a, b));
      REQUIRE(f->add(a, b) == oracle::schoolbook_add(f, a, b));
    }
  }
}

TEST_CASE("field axioms") {
  std::mt19937 rng(11);
  for (auto [p, k] : kSmallFields) {
    auto f = field_make(p, k);
    std::uniform_int_distribution<Code> d(0, f->q() - 1);
    for (int i = 0; i < 3000; ++i) {
      Code a = d(rng), b = d(rng), c = d(rng);
      CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
      CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
      CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
      CHECK(f->add(a, f->neg(a)) == 0);
      CHECK(f->frobenius(f->add(a, b)) == f->add(f->frobenius(a), f->frobenius(b)));
      if (a) {
        CHECK(f->mul(a, f->inv(a)) == 1);
        CHECK(f->pow(a, f->q() - 1) == 1);
      }
    }
    CHECK_THROWS_AS(f->inv(0), std::domain_error);
  }
}

TEST_CASE("primitive element and element order") {
  CHECK(primitive_element(field_make(2, 1)).code() == 1);
  CHECK(primitive_element(field_make(7, 1)).code() == 3);
  auto f7 = field_make(7, 1);
  CHECK(element_order({f7, 1}) == 1);
  CHECK(element_order({f7, 6}) == 2);
  CHECK(element_order({f7, 3}) == 6);
  CHECK_THROWS_AS(element_order({f7, 0}), std::domain_error);

  for (auto [p, k] : kSmallFields) {
    auto f = field_make(p, k);
    Code g = f->primitive();
    CHECK(oracle::order_by_powers(f, g) == f->q() - 1);
    // least in code order
    for (Code c = 1; c < g; ++c) CHECK(oracle::order_by_powers(f, c) < f->q() - 1);
    for (Code a = 1; a < f->q(); ++a) {
      auto t = element_order({f, a});
      CHECK(t == oracle::order_by_powers(f, a));
      CHECK((f->q() - 1) % t == 0);
    }
  }
}

TEST_CASE("polynomial arithmetic") {
  auto f = field_make(5, 1);
  Poly a = P(f, {1, 2, 3});
  Poly b = P(f, {4, 0, 1, 1});
  CHECK((a * b).degree() == a.degree() + b.degree());
  auto [q, r] = (a * b + P(f, {2, 1})).divmod(b);
  CHECK(q == a);
  CHECK(r == P(f, {2, 1}));
  CHECK(P(f, {0, 0}).is_zero());
  CHECK(P(f, {1, 0, 0}).degree() == 0);
  CHECK_THROWS_AS(a.divmod(Poly(f)), std::domain_error);
  CHECK(gcd(a * b, a * P(f, {1, 1})) == a.monic());
  CHECK(P(f, {1, 0, 1}).to_string() == "x^2 + 1");

  std::mt19937 rng(3);
  auto f9 = field_make(3, 2);
  std::uniform_int_distribution<Code> d(0, 8);
  for (int it = 0; it < 200; ++it) {
    std::vector<Code> ca(1 + it % 6), cb(1 + it % 4);
    for (auto& c : ca) c = d(rng);
    for (auto& c : cb) c = d(rng);
    cb.back() = 1 + d(rng) % 8;
    Poly x(f9, ca), y(f9, cb);
    auto [qq, rr] = x.divmod(y);
    CHECK(qq * y + rr == x);
    CHECK(rr.degree() < y.degree());
  }
}

TEST_CASE("irreducibility examples") {
  auto f7 = field_make(7, 1);
  auto f5 = field_make(5, 1);
  CHECK(poly_is_irreducible(P(f7, {1, 0, 1})));
  CHECK_FALSE(poly_is_irreducible(P(f5, {1, 0, 1})));
  for (Code c = 0; c < 7; ++c) CHECK(poly_is_irreducible(P(f7, {c, 1})));
  CHECK_THROWS_AS(poly_is_irreducible(P(f7, {1, 0, 2})), std::invalid_argument);
  CHECK_THROWS_AS(poly_is_irreducible(P(f7, {3})), std::invalid_argument);
}

TEST_CASE("irreducibility agrees with trial division on exhaustive sweeps") {
  const std::vector<std::pair<FieldPtr, unsigned>> sweeps = {
      {field_make(2, 1), 8}, {field_make(3, 1), 6}, {field_make(2, 2), 5}, {field_make(5, 1), 4},
      {field_make(7, 1), 4}, {field_make(2, 3), 4}, {field_make(3, 2), 4}};
  for (const auto& [f, maxdeg] : sweeps) {
    for (unsigned d = 1; d <= maxdeg; ++d) {
      std::uint64_t budget = 10'000'000;
      oracle::for_each_monic(f, d, budget, [&](const Poly& g) {
        auto expect = oracle::irreducible_by_trial_division(g);
        REQUIRE(expect.has_value());
        CHECK_MESSAGE(poly_is_irreducible(g) == *expect, g.to_string());
        return true;
      });
    }
  }
}

TEST_CASE("binomial factorization matches independent factorizers") {
  std::size_t trial_checked = 0;
  for (std::uint32_t q : {4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 25u}) {
    auto [p, k] = prime_power(q);
    auto f = field_make(p, k);
    for (Code a = 1; a < q; ++a) {
      CAPTURE(q);
      CAPTURE(a);
      auto factors = binomial_factors(f, {f, a});
      Poly target = Poly::binomial(f, q - 1, a);
      Poly prod = Poly::constant(f, 1);
      for (const auto& g : factors) {
        prod = prod * g;
        CHECK(poly_is_irreducible(g));
        CHECK(g.degree() == static_cast<int>(f->order(a)));
      }
      CHECK(prod == target);
      auto sorted = factors;
      std::sort(sorted.begin(), sorted.end());
      CHECK(sorted == oracle::factor_by_berlekamp(target));
      if (auto td = oracle::factor_by_trial_division(target, 2'000'000)) {
        CHECK(sorted == *td);
        ++trial_checked;
      }
    }
  }
  MESSAGE("binomials confirmed by trial division: " << trial_checked);
  CHECK(trial_checked >= 57);
}

TEST_CASE("binomial factorization examples") {
  auto f7 = field_make(7, 1);
  auto one = binomial_factors(f7, {f7, 1});
  REQUIRE(one.size() == 6);
  for (Code b = 1; b < 7; ++b) CHECK(one[b - 1] == Poly::binomial(f7, 1, b));
  // a = -1 has order 2: factors x^2 - b with b^3 = -1, i.e. b in {3, 5, 6}.
  auto minus = binomial_factors(f7, {f7, 6});
  REQUIRE(minus.size() == 3);
  CHECK(minus[0] == Poly::binomial(f7, 2, 3));
  CHECK(minus[1] == Poly::binomial(f7, 2, 5));
  CHECK(minus[2] == Poly::binomial(f7, 2, 6));
  auto f9 = field_make(3, 2);
  Code g = f9->primitive();
  auto single = binomial_factors(f9, {f9, g});
  REQUIRE(single.size() == 1);
  CHECK(single[0] == Poly::binomial(f9, 8, g));
  CHECK(*oracle::irreducible_by_trial_division(single[0]));
  CHECK_THROWS_AS(binomial_factors(f7, {f7, 0}), std::domain_error);
}
