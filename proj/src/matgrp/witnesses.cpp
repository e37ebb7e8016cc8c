#include <functional>
#include <stdexcept>

#include "ncg/classical.hpp"
#include "ncg/errors.hpp"
#include "ncg/unitary.hpp"

namespace ncg::mat {

UnitarySpace::UnitarySpace(unsigned n, std::uint32_t q) : n_(n), q_(q) {
  if (n == 0) throw std::invalid_argument("unitary space needs positive dimension");
  auto [p, k] = ff::prime_power(q);
  frob_exp_ = k;
  f_ = ff::field_make(p, 2 * k);
}

Vec UnitarySpace::sigma(const Vec& v) const {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = sigma(v[i]);
  return r;
}

Code UnitarySpace::form(const Vec& u, const Vec& v) const {
  Code s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s = f_->add(s, f_->mul(u[i], sigma(v[i])));
  return s;
}

Matrix UnitarySpace::sigma_transpose(const Matrix& a) const { return a.frobenius(frob_exp_).transpose(); }

Code UnitarySpace::norm_root(Code n) const {
  if (n == 0) throw std::domain_error("norm equation with zero right-hand side");
  const std::uint32_t ln = f_->log(n);
  if (ln % (q_ + 1) != 0) throw std::domain_error("value is not a norm from GF(q^2)");
  return f_->exp(ln / (q_ + 1));
}

bool in_special_unitary(const Matrix& a, const UnitarySpace& space) {
  if (a.n() != space.n() || !ff::same_field(a.field(), space.field()))
    throw std::invalid_argument("matrix is not n x n over GF(q^2) for this unitary space");
  if (a.det() != 1) return false;
  return (a * space.sigma_transpose(a)).is_identity();
}

Code unitary_lambda(const UnitarySpace& space) {
  const auto& F = *space.field();
  return F.pow(F.primitive(), static_cast<std::int64_t>(space.q()) - 1);
}

std::optional<Matrix> unitary_scalar_witness_nondegenerate(const UnitarySpace& space) {
  if (space.n() < 2) throw std::invalid_argument("witness needs n >= 2");
  if (space.n() % (space.q() + 1) == 0) return std::nullopt;
  const auto& F = *space.field();
  Code lambda = unitary_lambda(space);
  std::vector<Code> d(space.n(), lambda);
  d[0] = F.pow(lambda, -static_cast<std::int64_t>(space.n() - 1));
  return Matrix::diagonal(space.field(), d);
}

SingularWitnessParams singular_witness_params(const UnitarySpace& space) {
  const auto& F = *space.field();
  const Code omega = F.primitive();
  const std::int64_t q = space.q();
  if (q % 2 == 0) return {F.pow(omega, q + 1), 1};
  return {omega, F.pow(omega, (q - 1) / 2)};
}

Matrix unitary_scalar_witness_singular(const UnitarySpace& space) {
  if (space.n() < 2) throw std::invalid_argument("witness needs n >= 2");
  const auto& F = *space.field();
  auto [g, d] = singular_witness_params(space);
  Code gd = F.mul(g, d);
  Matrix block(space.field(), 2);
  block(0, 0) = F.add(1, gd);
  block(0, 1) = g;
  block(1, 0) = F.neg(F.mul(gd, d));
  block(1, 1) = F.sub(1, gd);
  if (space.n() == 2) return block;
  return direct_sum(block, Matrix::identity(space.field(), space.n() - 2));
}

Matrix unitary_transvection(const UnitarySpace& space, const Vec& v) {
  if (v.size() != space.n()) throw std::invalid_argument("vector length does not match space");
  if (space.form(v, v) != 0) throw std::invalid_argument("transvection needs a singular vector");
  bool zero = true;
  for (auto c : v) zero = zero && c == 0;
  if (zero) throw std::invalid_argument("transvection needs a nonzero vector");
  const auto& F = *space.field();
  auto [g, d] = singular_witness_params(space);
  const Code a = F.neg(F.mul(g, d));
  const Vec vs = space.sigma(v);
  Matrix t = Matrix::identity(space.field(), space.n());
  for (std::size_t i = 0; i < space.n(); ++i)
    for (std::size_t j = 0; j < space.n(); ++j) t(i, j) = F.add(t(i, j), F.mul(a, F.mul(vs[i], v[j])));
  return t;
}

Matrix unitary_hyperplane_scalar(const UnitarySpace& space, const Vec& w) {
  if (w.size() != space.n()) throw std::invalid_argument("vector length does not match space");
  const auto& F = *space.field();
  const Code ww = space.form(w, w);
  if (ww == 0) throw std::invalid_argument("hyperplane scalar matrix needs a non-singular vector");
  const Code lambda = unitary_lambda(space);
  const Code c = F.div(F.sub(F.pow(lambda, 1 - static_cast<std::int64_t>(space.n())), lambda), ww);
  const Vec ws = space.sigma(w);
  Matrix m = Matrix::scalar(space.field(), space.n(), lambda);
  for (std::size_t i = 0; i < space.n(); ++i)
    for (std::size_t j = 0; j < space.n(); ++j) m(i, j) = F.add(m(i, j), F.mul(c, F.mul(ws[i], w[j])));
  return m;
}

std::vector<Matrix> enumerate_special_unitary(const UnitarySpace& space, std::uint64_t cap) {
  const std::uint64_t order = order_su(space.n(), space.q());
  if (order > cap) throw CapExceeded("|SU(" + std::to_string(space.n()) + "," + std::to_string(space.q()) + ")| = " + std::to_string(order) + " exceeds enumeration cap");
  const auto& F = *space.field();
  const unsigned n = space.n();
  const std::uint32_t Q = F.q();
  std::vector<Vec> units;
  std::uint64_t total = 1;
  for (unsigned i = 0; i < n; ++i) total *= Q;
  Vec v(n, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t t = idx;
    for (unsigned i = 0; i < n; ++i) {
      v[i] = static_cast<Code>(t % Q);
      t /= Q;
    }
    if (space.form(v, v) == 1) units.push_back(v);
  }
  std::vector<Matrix> out;
  out.reserve(order);
  std::vector<Vec> rows(n);
  std::function<void(unsigned, const std::vector<std::size_t>&)> extend = [&](unsigned level, const std::vector<std::size_t>& cand) {
    if (level + 1 == n) {
      if (cand.empty()) return;
      rows[level] = units[cand.front()];
      Matrix m = Matrix::from_rows(space.field(), rows);
      Code d = m.det();
      Code s = F.inv(d);
      for (std::size_t j = 0; j < n; ++j) m(level, j) = F.mul(m(level, j), s);
      out.push_back(std::move(m));
      return;
    }
    for (std::size_t c : cand) {
      rows[level] = units[c];
      std::vector<std::size_t> next;
      for (std::size_t o : cand)
        if (o != c && space.form(units[o], units[c]) == 0) next.push_back(o);
      extend(level + 1, next);
    }
  };
  std::vector<std::size_t> all(units.size());
  for (std::size_t i = 0; i < units.size(); ++i) all[i] = i;
  extend(0, all);
  if (out.size() != order) throw std::logic_error("SU enumeration produced the wrong number of elements");
  return out;
}

namespace {

bool acts_as_scalar_on_each(const Matrix& a, const std::vector<Subspace>& delta) {
  for (const auto& s : delta)
    if (!s.scalar_action(a)) return false;
  return true;
}

// First nonzero singular vector of s (enumerating coefficient tuples over its
// basis), if any.
std::optional<Vec> find_singular_vector(const UnitarySpace& space, const Subspace& s) {
  const auto& F = *space.field();
  const std::size_t d = s.dim();
  const std::uint32_t Q = F.q();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < d; ++i) {
    total *= Q;
    if (total > (1ull << 26)) break;
  }
  std::vector<Code> coeff(d, 0);
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    std::uint64_t t = idx;
    for (std::size_t i = 0; i < d; ++i) {
      coeff[i] = static_cast<Code>(t % Q);
      t /= Q;
    }
    Vec v(space.n(), 0);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < space.n(); ++j) v[j] = F.add(v[j], F.mul(coeff[i], s.basis()[i][j]));
    if (space.form(v, v) == 0) return v;
  }
  return std::nullopt;
}

}  // namespace

StabilizerSearch pointwise_stabilizer_search(const UnitarySpace& space, const std::vector<Subspace>& delta, std::uint64_t cap) {
  Subspace u(space.field(), space.n());
  for (const auto& s : delta) {
    if (s.ambient_dim() != space.n() || !ff::same_field(s.field(), space.field()))
      throw std::invalid_argument("subspace does not live in this unitary space");
    u = u.join(s);
  }
  StabilizerSearch result;
  if (u.dim() < space.n()) {
    Subspace up = u.perp(space);
    if (auto v = find_singular_vector(space, up)) {
      result.method = "hyperplane-singular";
      result.witness = unitary_transvection(space, *v);
      return result;
    }
    // up is a non-degenerate line; u is its perp.
    if (space.n() % (space.q() + 1) != 0) {
      result.method = "hyperplane-nondegenerate";
      result.witness = unitary_hyperplane_scalar(space, up.basis().front());
      return result;
    }
  }
  result.method = "exhaustive";
  for (const auto& a : enumerate_special_unitary(space, cap)) {
    ++result.elements_searched;
    if (!a.is_scalar() && acts_as_scalar_on_each(a, delta)) {
      result.witness = a;
      break;
    }
  }
  return result;
}

std::optional<Matrix> pointwise_stabilizer_nontrivial(const UnitarySpace& space, const std::vector<Subspace>& delta, std::uint64_t cap) {
  return pointwise_stabilizer_search(space, delta, cap).witness;
}

}  // namespace ncg::mat
