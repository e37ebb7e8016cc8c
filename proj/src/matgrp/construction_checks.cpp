#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "ncg/classical.hpp"
#include "ncg/verification.hpp"

namespace ncg::mat {

void VerificationReport::add(std::string name, bool pass, std::string detail) {
  checks.push_back({std::move(name), pass, std::move(detail)});
}

bool VerificationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const Check* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

using MatrixSet = std::unordered_set<Matrix, MatrixHash>;

bool acts_as(const Subspace& s, const Matrix& a, Code c) {
  auto k = s.scalar_action(a);
  return k && *k == c;
}

bool witness_ok(const UnitarySpace& space, const Matrix& m, const std::vector<Subspace>& delta) {
  if (!in_special_unitary(m, space) || m.is_scalar()) return false;
  for (const auto& s : delta)
    if (!s.scalar_action(m)) return false;
  return true;
}

Vec unit_vector(unsigned n, unsigned i) {
  Vec v(n, 0);
  v[i] = 1;
  return v;
}

// S^e = I with S^(e/r) != I for every prime r | e.
bool has_order(const Matrix& s, std::uint64_t e) {
  if (!s.pow(static_cast<std::int64_t>(e)).is_identity()) return false;
  for (auto r : ff::prime_factors(e))
    if (s.pow(static_cast<std::int64_t>(e / r)).is_identity()) return false;
  return true;
}

std::vector<Matrix> greedy_generators(const std::vector<Matrix>& elements) {
  std::vector<Matrix> gens;
  MatrixSet span;
  for (const auto& a : elements) {
    if (span.count(a)) continue;
    gens.push_back(a);
    auto closure = matrix_group_closure(gens);
    span = MatrixSet(closure.begin(), closure.end());
  }
  return gens;
}

std::vector<Matrix> centralizer(const std::vector<Matrix>& group, const std::vector<Matrix>& gens) {
  std::vector<Matrix> out;
  for (const auto& h : group) {
    bool ok = true;
    for (const auto& g : gens)
      if (!(h * g == g * h)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(h);
  }
  return out;
}

bool same_set(std::vector<Matrix> a, std::vector<Matrix> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace

DiagonalTriple diagonal_triple_matrices(std::uint32_t q) {
  UnitarySpace space(3, q);
  const auto& f = space.field();
  const ff::Field& F = *f;
  const Code l = unitary_lambda(space);
  const Code l2 = F.pow(l, -2);
  Matrix c2(f, 3), c3(f, 3);
  c2(0, 1) = 1;
  c2(1, 0) = 1;
  c2(2, 2) = F.neg(1);
  c3(0, 2) = 1;
  c3(1, 1) = F.neg(1);
  c3(2, 0) = 1;
  return {Matrix::diagonal(f, {l2, l, l}), Matrix::diagonal(f, {l, l2, l}), Matrix::diagonal(f, {l, l, l2}), c2, c3};
}

VerificationReport verify_diagonal_triple(std::uint32_t q, bool brute_force) {
  VerificationReport rep;
  rep.subject = "diagonal triple in SU(3," + std::to_string(q) + ")";
  UnitarySpace space(3, q);
  auto t = diagonal_triple_matrices(q);
  const Matrix* bs[3] = {&t.b1, &t.b2, &t.b3};
  for (int i = 0; i < 3; ++i) {
    const std::string tag = "B" + std::to_string(i + 1);
    rep.add(tag + " in SU", in_special_unitary(*bs[i], space));
    rep.add(tag + " non-central", !bs[i]->is_scalar(), bs[i]->is_scalar() ? "lambda^3 = 1, so " + tag + " is scalar" : "");
  }
  rep.add("conjugators in SU", in_special_unitary(t.to_b2, space) && in_special_unitary(t.to_b3, space));
  rep.add("B1 conjugate to B2", conjugate(t.b1, t.to_b2) == t.b2);
  rep.add("B1 conjugate to B3", conjugate(t.b1, t.to_b3) == t.b3);
  if (!brute_force) return rep;

  auto su = enumerate_special_unitary(space);
  MatrixSet cls;
  for (const auto& g : su) cls.insert(conjugate(t.b1, g));
  rep.counts["class size"] = cls.size();
  std::vector<Matrix> commuting;
  for (const auto& a : cls) {
    bool all = true;
    for (auto* b : bs) all = all && (a * *b == *b * a);
    if (all) commuting.push_back(a);
  }
  rep.add("conjugates commuting with all B_i are the B_i", same_set(commuting, {t.b1, t.b2, t.b3}),
          std::to_string(commuting.size()) + " found");
  auto points = projective_points(space.field(), 3);
  std::uint64_t bad = 0;
  for (const auto& a : cls) {
    bool found = false;
    for (const auto& p : points) {
      auto line = Subspace::span(space.field(), 3, {p});
      if (line.is_stabilized_by(t.b1) && line.is_stabilized_by(a)) {
        found = true;
        break;
      }
    }
    if (!found) ++bad;
  }
  rep.add("<B1, A> stabilises a line for every conjugate A", bad == 0, std::to_string(bad) + " exceptions");
  return rep;
}

CyclicShiftPair cyclic_shift_matrices(unsigned n, std::uint32_t q) {
  if (n < 3) throw std::invalid_argument("need n >= 3");
  UnitarySpace space(n, q);
  const auto& f = space.field();
  const ff::Field& F = *f;
  Matrix r = companion_matrix(Poly::binomial(f, n, 1));
  Matrix tail(f, 2);
  if (q % 2 == 1) {
    tail(0, 0) = F.neg(1);
    tail(1, 1) = F.neg(1);
  } else {
    tail(0, 1) = 1;
    tail(1, 0) = 1;
  }
  return {r, direct_sum(Matrix::identity(f, n - 2), tail)};
}

VerificationReport verify_cyclic_shift(unsigned n, std::uint32_t q) {
  VerificationReport rep;
  rep.subject = "C(x^" + std::to_string(n) + " - 1) in SU(" + std::to_string(n) + "," + std::to_string(q) + ")";
  UnitarySpace space(n, q);
  const ff::Field& F = *space.field();
  auto [r, a] = cyclic_shift_matrices(n, q);
  rep.add("R^-1 = R^T", r.inverse() == r.transpose());
  rep.add("det R = 1", r.det() == 1);
  rep.add("R in SU", in_special_unitary(r, space));
  rep.add("A in SU", in_special_unitary(a, space));
  rep.add("A is an involution", (a * a).is_identity() && !a.is_identity());
  Matrix c = commutator(r, a);
  if (q % 2 == 1)
    rep.add("[R,A] corner entries", c(0, 0) == F.neg(1) && c(n - 1, n - 1) == 1,
            "(1,1) = " + F.to_string(c(0, 0)) + ", (n,n) = " + F.to_string(c(n - 1, n - 1)));
  else
    rep.add("[R,A] corner entries", c(0, 0) == 0, "(1,1) = " + F.to_string(c(0, 0)));
  rep.add("[R,A] non-scalar", !c.is_scalar());
  return rep;
}

Code cyclic_companion_det(unsigned n, std::uint32_t q) {
  auto f = field_of_order(q);
  return companion_matrix(Poly::binomial(f, n, 1)).det();
}

SingerData singer_normalizer_generators(unsigned n, std::uint32_t q, bool unitary) {
  if (n < 2 || !ff::is_prime(n)) throw std::invalid_argument("Singer construction needs a prime dimension");
  const std::uint64_t Q = unitary ? std::uint64_t{q} * q : q;
  auto f = field_of_order(Q);
  std::uint64_t qn = 1;
  for (unsigned i = 0; i < n; ++i) qn *= Q;
  const std::uint64_t m = qn - 1;
  const auto primes = ff::prime_factors(m);
  const Poly x = Poly::x(f);
  const Poly one = Poly::constant(f, 1);
  std::optional<Poly> found;
  std::vector<Code> c(n + 1, 0);
  c[n] = 1;
  for (std::uint64_t idx = 0; idx < qn && !found; ++idx) {
    std::uint64_t t = idx;
    for (unsigned i = 0; i < n; ++i) {
      c[i] = static_cast<Code>(t % Q);
      t /= Q;
    }
    if (c[0] == 0) continue;
    Poly p(f, c);
    if (!poly_is_irreducible(p)) continue;
    bool primitive = true;
    for (auto r : primes)
      if (powmod(x, m / r, p) == one) {
        primitive = false;
        break;
      }
    if (primitive) found = p;
  }
  if (!found) throw std::logic_error("no primitive polynomial found");
  SingerData d{companion_matrix(*found), Matrix(f, n), *found, m, unit_vector(n, 0)};
  for (unsigned i = 0; i < n; ++i) {
    Poly r = powmod(x, i * Q, *found);
    for (unsigned j = 0; j < n; ++j) d.b(i, j) = r.coeff(j);
  }
  return d;
}

VerificationReport verify_singer(unsigned n, std::uint32_t q, bool unitary) {
  VerificationReport rep;
  const std::uint64_t Q = unitary ? std::uint64_t{q} * q : q;
  rep.subject = std::string("Singer cycle in GL(") + std::to_string(n) + "," + std::to_string(Q) + ")";
  auto d = singer_normalizer_generators(n, q, unitary);
  const auto& f = d.s.field();
  rep.counts["singer order"] = d.s_order;
  rep.add("S has order Q^n - 1", has_order(d.s, d.s_order));
  rep.add("B^-1 S B = S^Q", conjugate(d.s, d.b) == d.s.pow(static_cast<std::int64_t>(Q)));
  rep.add("char poly of B is x^n - 1", char_poly(d.b) == Poly::binomial(f, n, 1));
  rep.add("B fixes the line <e1>", times(d.fixed_line, d.b) == d.fixed_line);
  const Code expect = (q % 2 == 0 || n % 2 == 1) ? Code{1} : f->neg(1);
  rep.add("det C(x^n - 1)", companion_matrix(Poly::binomial(f, n, 1)).det() == expect);
  // B and C(x^n - 1) share a characteristic polynomial; a cyclic vector for B
  // makes them similar.
  bool cyclic = false;
  std::uint64_t total = 1;
  for (unsigned i = 0; i < n; ++i) total *= Q;
  for (std::uint64_t idx = 1; idx < total && idx < 100'000 && !cyclic; ++idx) {
    Vec v(n);
    std::uint64_t t = idx;
    for (unsigned i = 0; i < n; ++i) {
      v[i] = static_cast<Code>(t % Q);
      t /= Q;
    }
    std::vector<Vec> orbit{v};
    for (unsigned i = 1; i < n; ++i) orbit.push_back(times(orbit.back(), d.b));
    cyclic = Subspace::span(f, n, orbit).dim() == n;
  }
  rep.add("B similar to C(x^n - 1)", cyclic);
  if (order_gl(n, Q) <= 200'000) {
    MatrixSet powers;
    Matrix p = Matrix::identity(f, n);
    for (std::uint64_t i = 0; i < d.s_order; ++i, p = p * d.s) powers.insert(p);
    std::uint64_t count = 0;
    for_each_general_linear(f, n, [&](const Matrix& g) {
      if (powers.count(conjugate(d.s, g))) ++count;
    });
    rep.counts["normaliser order"] = count;
    rep.add("normaliser order n(Q^n - 1)", count == n * d.s_order, std::to_string(count));
  }
  return rep;
}

VerificationReport verify_sl2_irreducible(std::uint32_t q) {
  VerificationReport rep;
  rep.subject = "SL(2," + std::to_string(q) + ")";
  auto f = field_of_order(q);
  const ff::Field& F = *f;
  const Poly x2p1(f, {1, 0, 1});
  std::uint64_t total = 0, irred = 0, irred_q2 = 0, witnesses = 0, bad_poly = 0;
  const auto q1 = static_cast<std::int64_t>(q) - 1;
  const auto q21 = static_cast<std::int64_t>(q) * q - 1;
  for_each_special_linear(f, 2, [&](const Matrix& a) {
    ++total;
    Poly chi = char_poly(a);
    bool has_root = false;
    for (Code r = 0; r < F.q() && !has_root; ++r) has_root = chi.eval(r) == 0;
    if (has_root) return;
    ++irred;
    if (a.pow(q21).is_scalar()) ++irred_q2;
    if (a.pow(q1).is_scalar()) {
      ++witnesses;
      if (!(chi == x2p1)) ++bad_poly;
    }
  });
  rep.counts["elements"] = total;
  rep.counts["irreducible"] = irred;
  rep.counts["witnesses"] = witnesses;
  rep.add("A^(q^2-1) central for every irreducible A", irred_q2 == irred);
  rep.add("witness exists iff q = 3 mod 4", (witnesses > 0) == (q % 4 == 3), std::to_string(witnesses) + " witnesses");
  rep.add("witnesses have char poly x^2 + 1", bad_poly == 0);
  if (q <= 4) {
    std::uint64_t n3 = 0;
    for_each_special_linear(f, 3, [&](const Matrix& a) {
      Poly chi = char_poly(a);
      for (Code r = 0; r < F.q(); ++r)
        if (chi.eval(r) == 0) return;
      if (a.pow(q21).is_scalar()) ++n3;
    });
    rep.counts["irreducible SL(3) with A^(q^2-1) central"] = n3;
    rep.add("no irreducible A in SL(3,q) with A^(q^2-1) central", n3 == 0);
  }
  return rep;
}

VerificationReport verify_line_stabilisers(unsigned n, std::uint32_t q) {
  if (n < 2) throw std::invalid_argument("need n >= 2");
  VerificationReport rep;
  rep.subject = "SL(" + std::to_string(n) + "," + std::to_string(q) + ")";
  auto f = field_of_order(q);
  auto h = enumerate_special_linear(f, n);
  std::vector<Matrix> hx, hxy, z;
  auto row_is = [&](const Matrix& a, unsigned r) {
    if (a(r, r) == 0) return false;
    for (unsigned j = 0; j < n; ++j)
      if (j != r && a(r, j) != 0) return false;
    return true;
  };
  for (const auto& a : h) {
    if (a.is_scalar()) z.push_back(a);
    if (row_is(a, 0)) {
      hx.push_back(a);
      if (row_is(a, 1)) hxy.push_back(a);
    }
  }
  rep.counts["|H|"] = h.size();
  rep.counts["|H_X|"] = hx.size();
  rep.counts["|H_X and H_Y|"] = hxy.size();
  rep.counts["|Z(H)|"] = z.size();

  std::vector<Matrix> inv;
  inv.reserve(hx.size());
  for (const auto& a : hx) inv.push_back(a.inverse());
  std::uint64_t bad = 0;
  for (std::size_t i = 0; i < hx.size(); ++i)
    for (std::size_t j = 0; j < hx.size(); ++j) {
      Matrix c = inv[i] * inv[j] * hx[i] * hx[j];
      if (c.is_scalar() && !c.is_identity()) ++bad;
    }
  rep.add("no commutator in H_X is a non-identity scalar", bad == 0, std::to_string(bad) + " exceptions");

  auto cx = centralizer(h, greedy_generators(hx));
  rep.counts["|C_H(H_X)|"] = cx.size();
  rep.add("C_H(H_X) = Z(H)", same_set(cx, z));

  auto cxy = centralizer(h, greedy_generators(hxy));
  rep.counts["|C_H(H_X and H_Y)|"] = cxy.size();
  const bool exceptional = n == 2 || (n == 3 && q == 2);
  rep.add(exceptional ? "C_H(H_X and H_Y) = H_X and H_Y" : "C_H(H_X and H_Y) = Z(H)",
          same_set(cxy, exceptional ? hxy : z));
  return rep;
}

VerificationReport verify_unitary_witnesses(unsigned n, std::uint32_t q) {
  VerificationReport rep;
  rep.subject = "SU(" + std::to_string(n) + "," + std::to_string(q) + ")";
  UnitarySpace space(n, q);
  const auto& f = space.field();
  const ff::Field& F = *f;
  const Code l = unitary_lambda(space);
  const bool obstructed = n % (q + 1) == 0;

  std::vector<Vec> tail;
  for (unsigned i = 1; i < n; ++i) tail.push_back(unit_vector(n, i));
  const Subspace w = Subspace::span(f, n, tail);
  const Subspace e1 = Subspace::span(f, n, {unit_vector(n, 0)});

  auto nd = unitary_scalar_witness_nondegenerate(space);
  if (obstructed) {
    rep.add("nondegenerate witness absent when (q+1) | n", !nd.has_value());
    if (order_su(n, q) <= 1'000'000) {
      auto s = pointwise_stabilizer_search(space, {w});
      rep.counts["exhaustive elements searched"] = s.elements_searched;
      rep.add("exhaustive search confirms no witness on <e2..en>", !s.witness && s.method == "exhaustive");
    }
  } else {
    rep.add("nondegenerate witness present", nd.has_value());
    if (nd) {
      rep.add("nondegenerate witness in SU, non-scalar", in_special_unitary(*nd, space) && !nd->is_scalar());
      rep.add("nondegenerate witness acts as lambda on <e2..en>", acts_as(w, *nd, l));
      rep.add("nondegenerate witness acts as lambda^(1-n) on <e1>",
              acts_as(e1, *nd, F.pow(l, 1 - static_cast<std::int64_t>(n))));
    }
  }

  auto [g, dl] = singular_witness_params(space);
  rep.add("delta^(q+1) = -1", F.pow(dl, q + 1) == F.neg(1));
  Matrix sw = unitary_scalar_witness_singular(space);
  std::vector<Vec> ws{unit_vector(n, 1)};
  ws[0][0] = dl;
  for (unsigned i = 2; i < n; ++i) ws.push_back(unit_vector(n, i));
  const Subspace wsing = Subspace::span(f, n, ws);
  rep.add("singular witness in SU, non-scalar", in_special_unitary(sw, space) && !sw.is_scalar());
  rep.add("singular witness fixes <d e1 + e2, e3..en> pointwise", acts_as(wsing, sw, 1));
  rep.add("singular hyperplane has totally singular perp", wsing.perp(space).is_totally_singular(space));

  auto check_search = [&](const std::string& name, const std::vector<Subspace>& delta, const std::string& method) {
    auto s = pointwise_stabilizer_search(space, delta);
    bool pass = s.witness && witness_ok(space, *s.witness, delta) && (method.empty() || s.method == method);
    rep.add(name, pass, s.method);
  };
  if (!obstructed) check_search("search on nondegenerate hyperplane", {w}, "hyperplane-nondegenerate");
  check_search("search on singular hyperplane", {wsing}, "hyperplane-singular");
  std::vector<Subspace> small;
  for (unsigned i = 2; i < n; ++i) small.push_back(Subspace::span(f, n, {unit_vector(n, i)}));
  check_search("search on lines inside an (n-2)-space", small, "hyperplane-singular");

  // n - 1 random lines: fewer than ceil(n/1) subspaces.
  if (!obstructed) {
    std::mt19937_64 rng(0x5eed + n * 131 + q);
    std::uniform_int_distribution<Code> coeff(0, F.q() - 1);
    std::uint64_t failures = 0;
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<Subspace> delta;
      while (delta.size() + 1 < n) {
        Vec v(n);
        for (auto& c : v) c = coeff(rng);
        auto s = Subspace::span(f, n, {v});
        if (s.dim() == 1) delta.push_back(s);
      }
      auto s = pointwise_stabilizer_search(space, delta);
      if (!s.witness || !witness_ok(space, *s.witness, delta)) ++failures;
    }
    rep.add("search on n-1 random lines", failures == 0, std::to_string(failures) + " failures in 8");
  }
  return rep;
}

}  // namespace ncg::mat
