#include "ncg/classical.hpp"

#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "ncg/errors.hpp"
#include "ncg/unitary.hpp"

namespace ncg::mat {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("group order exceeds 64 bits");
  return r;
}

std::uint64_t checked_pow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r = checked_mul(r, b);
  return r;
}

void require_prime_power(std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("q must be a prime power");
  ff::prime_power(q);
}

// Vectors of F^n indexed by sum v_i Q^i.
struct VecCodec {
  const ff::Field& f;
  unsigned n;
  std::uint64_t total;

  VecCodec(const ff::Field& field, unsigned dim) : f(field), n(dim), total(checked_pow(field.q(), dim)) {}

  Vec decode(std::uint64_t idx) const {
    Vec v(n);
    for (unsigned i = 0; i < n; ++i) {
      v[i] = static_cast<Code>(idx % f.q());
      idx /= f.q();
    }
    return v;
  }

  std::uint64_t encode(const Vec& v) const {
    std::uint64_t idx = 0;
    for (unsigned i = n; i-- > 0;) idx = idx * f.q() + v[i];
    return idx;
  }
};

void enumerate_linear(const FieldPtr& f, unsigned n, bool special, const std::function<void(const Matrix&)>& fn,
                      std::uint64_t cap) {
  if (n == 0) throw std::invalid_argument("dimension must be positive");
  const std::uint64_t order = special ? order_sl(n, f->q()) : order_gl(n, f->q());
  if (order > cap)
    throw CapExceeded("group order " + std::to_string(order) + " exceeds enumeration cap " + std::to_string(cap));
  const ff::Field& F = *f;
  VecCodec codec(F, n);
  std::vector<Vec> vecs(codec.total);
  for (std::uint64_t i = 0; i < codec.total; ++i) vecs[i] = codec.decode(i);
  std::vector<Vec> rows(n);

  auto add_scaled = [&](const Vec& a, Code c, const Vec& b) {
    Vec r(n);
    for (unsigned j = 0; j < n; ++j) r[j] = F.add(a[j], F.mul(c, b[j]));
    return r;
  };

  std::function<void(unsigned, const std::vector<std::uint64_t>&, const std::vector<char>&)> rec =
      [&](unsigned level, const std::vector<std::uint64_t>& span, const std::vector<char>& in_span) {
        if (special && level + 1 == n) {
          std::uint64_t c = 1;
          while (in_span[c]) ++c;
          rows[level] = vecs[c];
          Code d = Matrix::from_rows(f, rows).det();
          Vec r0 = add_scaled(Vec(n, 0), F.inv(d), vecs[c]);
          for (std::uint64_t s : span) {
            rows[level] = add_scaled(r0, 1, vecs[s]);
            fn(Matrix::from_rows(f, rows));
          }
          return;
        }
        for (std::uint64_t idx = 1; idx < codec.total; ++idx) {
          if (in_span[idx]) continue;
          rows[level] = vecs[idx];
          if (level + 1 == n) {
            fn(Matrix::from_rows(f, rows));
            continue;
          }
          std::vector<std::uint64_t> next_span;
          std::vector<char> next_in(codec.total, 0);
          next_span.reserve(span.size() * F.q());
          for (std::uint64_t s : span)
            for (Code a = 0; a < F.q(); ++a) {
              std::uint64_t e = codec.encode(add_scaled(vecs[s], a, vecs[idx]));
              next_in[e] = 1;
              next_span.push_back(e);
            }
          rec(level + 1, next_span, next_in);
        }
      };
  std::vector<char> in0(codec.total, 0);
  in0[0] = 1;
  rec(0, {0}, in0);
}

}  // namespace

FieldPtr field_of_order(std::uint64_t q) {
  require_prime_power(q);
  auto [p, k] = ff::prime_power(q);
  return ff::field_make(p, k);
}

std::uint64_t order_gl(unsigned n, std::uint64_t q) {
  require_prime_power(q);
  std::uint64_t qn = checked_pow(q, n);
  std::uint64_t r = 1;
  for (unsigned i = 0; i < n; ++i) r = checked_mul(r, qn - checked_pow(q, i));
  return r;
}

std::uint64_t order_sl(unsigned n, std::uint64_t q) {
  require_prime_power(q);
  std::uint64_t r = checked_pow(q, n * (n - 1) / 2);
  for (unsigned i = 2; i <= n; ++i) r = checked_mul(r, checked_pow(q, i) - 1);
  return r;
}

std::uint64_t order_psl(unsigned n, std::uint64_t q) { return order_sl(n, q) / std::gcd<std::uint64_t>(n, q - 1); }

std::uint64_t order_pgl(unsigned n, std::uint64_t q) { return order_sl(n, q); }

std::uint64_t order_su(unsigned n, std::uint64_t q) {
  require_prime_power(q);
  std::uint64_t r = checked_pow(q, n * (n - 1) / 2);
  for (unsigned i = 2; i <= n; ++i) {
    std::uint64_t qi = checked_pow(q, i);
    r = checked_mul(r, i % 2 == 0 ? qi - 1 : qi + 1);
  }
  return r;
}

std::uint64_t order_psu(unsigned n, std::uint64_t q) { return order_su(n, q) / std::gcd<std::uint64_t>(n, q + 1); }

void for_each_special_linear(const FieldPtr& f, unsigned n, const std::function<void(const Matrix&)>& fn,
                             std::uint64_t cap) {
  enumerate_linear(f, n, true, fn, cap);
}

void for_each_general_linear(const FieldPtr& f, unsigned n, const std::function<void(const Matrix&)>& fn,
                             std::uint64_t cap) {
  enumerate_linear(f, n, false, fn, cap);
}

std::vector<Matrix> enumerate_special_linear(const FieldPtr& f, unsigned n, std::uint64_t cap) {
  std::vector<Matrix> out;
  for_each_special_linear(f, n, [&](const Matrix& m) { out.push_back(m); }, cap);
  return out;
}

std::vector<Matrix> enumerate_general_linear(const FieldPtr& f, unsigned n, std::uint64_t cap) {
  std::vector<Matrix> out;
  for_each_general_linear(f, n, [&](const Matrix& m) { out.push_back(m); }, cap);
  return out;
}

std::vector<Matrix> special_linear_generators(const FieldPtr& f, unsigned n) {
  std::vector<Matrix> gens;
  const Code w = f->primitive();
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      if (i == j) continue;
      Code a = 1;
      for (unsigned k = 0; k < f->k(); ++k, a = f->mul(a, w)) {
        Matrix m = Matrix::identity(f, n);
        m(i, j) = a;
        gens.push_back(std::move(m));
      }
    }
  if (gens.empty()) gens.push_back(Matrix::identity(f, n));
  return gens;
}

std::vector<Matrix> general_linear_generators(const FieldPtr& f, unsigned n) {
  auto gens = special_linear_generators(f, n);
  std::vector<Code> d(n, 1);
  d[0] = f->primitive();
  gens.push_back(Matrix::diagonal(f, d));
  return gens;
}

Matrix random_special_unitary(const UnitarySpace& space, std::mt19937_64& rng) {
  const auto& f = space.field();
  const ff::Field& F = *f;
  const unsigned n = space.n();
  std::uniform_int_distribution<Code> coeff(0, F.q() - 1);
  std::vector<Vec> rows;
  for (unsigned i = 0; i < n; ++i) {
    Subspace w = Subspace::span(f, n, rows).perp(space);
    for (;;) {
      Vec v(n, 0);
      for (const auto& b : w.basis()) {
        Code c = coeff(rng);
        for (unsigned j = 0; j < n; ++j) v[j] = F.add(v[j], F.mul(c, b[j]));
      }
      Code nrm = space.form(v, v);
      if (nrm == 0) continue;
      Code s = space.norm_root(F.inv(nrm));
      for (auto& x : v) x = F.mul(x, s);
      rows.push_back(std::move(v));
      break;
    }
  }
  Matrix m = Matrix::from_rows(f, rows);
  Code d = F.inv(m.det());
  for (unsigned j = 0; j < n; ++j) m(n - 1, j) = F.mul(m(n - 1, j), d);
  return m;
}

std::vector<Matrix> matrix_group_closure(const std::vector<Matrix>& gens, std::uint64_t cap) {
  if (gens.empty()) throw std::invalid_argument("closure needs at least one generator");
  std::unordered_set<Matrix, MatrixHash> seen;
  std::vector<Matrix> out;
  Matrix id = Matrix::identity(gens.front().field(), gens.front().n());
  seen.insert(id);
  out.push_back(id);
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& g : gens) {
      Matrix m = out[head] * g;
      if (seen.insert(m).second) {
        out.push_back(std::move(m));
        if (out.size() > cap) throw CapExceeded("matrix group closure exceeds cap " + std::to_string(cap));
      }
    }
  }
  return out;
}

Vec normalize_projective(const ff::Field& f, Vec v) {
  std::size_t i = 0;
  while (i < v.size() && v[i] == 0) ++i;
  if (i == v.size()) throw std::invalid_argument("zero vector has no projective point");
  Code s = f.inv(v[i]);
  for (auto& x : v) x = f.mul(x, s);
  return v;
}

std::vector<Vec> projective_points(const FieldPtr& f, unsigned n) {
  VecCodec codec(*f, n);
  std::vector<Vec> out;
  for (std::uint64_t idx = 1; idx < codec.total; ++idx) {
    Vec v = codec.decode(idx);
    std::size_t i = 0;
    while (v[i] == 0) ++i;
    if (v[i] == 1) out.push_back(std::move(v));
  }
  return out;
}

std::vector<Vec> isotropic_points(const UnitarySpace& space) {
  std::vector<Vec> out;
  for (auto& v : projective_points(space.field(), space.n()))
    if (space.form(v, v) == 0) out.push_back(std::move(v));
  return out;
}

}  // namespace ncg::mat
