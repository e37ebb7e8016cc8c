#include "ncg/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace ncg::mat {

namespace {
void require_compatible(const Matrix& a, const Matrix& b) {
  if (a.n() != b.n() || !ff::same_field(a.field(), b.field()))
    throw std::invalid_argument("matrix dimension or field mismatch");
}
}  // namespace

Matrix Matrix::identity(const FieldPtr& f, std::size_t n) { return scalar(f, n, 1); }

Matrix Matrix::scalar(const FieldPtr& f, std::size_t n, Code c) {
  Matrix m(f, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

Matrix Matrix::diagonal(const FieldPtr& f, const std::vector<Code>& d) {
  Matrix m(f, d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::from_rows(const FieldPtr& f, const std::vector<Vec>& rows) {
  Matrix m(f, rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw std::invalid_argument("matrix rows must form a square array");
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (rows[i][j] >= f->q()) throw std::invalid_argument("matrix entry outside field");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Matrix Matrix::unit(const FieldPtr& f, std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(f, n);
  m(i, j) = 1;
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  require_compatible(*this, o);
  Matrix r(f_, n_);
  const ff::Field& F = *f_;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = 0; k < n_; ++k) {
      Code a = a_[i * n_ + k];
      if (a == 0) continue;
      const Code* orow = &o.a_[k * n_];
      Code* rrow = &r.a_[i * n_];
      for (std::size_t j = 0; j < n_; ++j) {
        if (orow[j]) rrow[j] = F.add(rrow[j], F.mul(a, orow[j]));
      }
    }
  }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require_compatible(*this, o);
  Matrix r(f_, n_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_->add(a_[i], o.a_[i]);
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  require_compatible(*this, o);
  Matrix r(f_, n_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_->sub(a_[i], o.a_[i]);
  return r;
}

Matrix Matrix::scaled(Code c) const {
  Matrix r(f_, n_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_->mul(a_[i], c);
  return r;
}

Matrix Matrix::pow(std::int64_t e) const {
  Matrix base = e < 0 ? inverse() : *this;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  Matrix r = identity(f_, n_);
  while (k) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(f_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Matrix Matrix::frobenius(unsigned e) const {
  Matrix r(f_, n_);
  std::int64_t power = 1;
  for (unsigned i = 0; i < e; ++i) power *= static_cast<std::int64_t>(f_->p());
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_->pow(a_[i], power);
  return r;
}

Code Matrix::det() const {
  const ff::Field& F = *f_;
  std::vector<Code> m = a_;
  Code d = 1;
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t piv = n_;
    for (std::size_t r = c; r < n_; ++r)
      if (m[r * n_ + c]) {
        piv = r;
        break;
      }
    if (piv == n_) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n_; ++j) std::swap(m[piv * n_ + j], m[c * n_ + j]);
      d = F.neg(d);
    }
    Code p = m[c * n_ + c];
    d = F.mul(d, p);
    Code pinv = F.inv(p);
    for (std::size_t r = c + 1; r < n_; ++r) {
      Code factor = F.mul(m[r * n_ + c], pinv);
      if (!factor) continue;
      for (std::size_t j = c; j < n_; ++j) m[r * n_ + j] = F.sub(m[r * n_ + j], F.mul(factor, m[c * n_ + j]));
    }
  }
  return d;
}

Matrix Matrix::inverse() const {
  const ff::Field& F = *f_;
  Matrix m = *this;
  Matrix r = identity(f_, n_);
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t piv = n_;
    for (std::size_t i = c; i < n_; ++i)
      if (m(i, c)) {
        piv = i;
        break;
      }
    if (piv == n_) throw std::domain_error("matrix is singular");
    if (piv != c)
      for (std::size_t j = 0; j < n_; ++j) {
        std::swap(m(piv, j), m(c, j));
        std::swap(r(piv, j), r(c, j));
      }
    Code pinv = F.inv(m(c, c));
    for (std::size_t j = 0; j < n_; ++j) {
      m(c, j) = F.mul(m(c, j), pinv);
      r(c, j) = F.mul(r(c, j), pinv);
    }
    for (std::size_t i = 0; i < n_; ++i) {
      if (i == c) continue;
      Code factor = m(i, c);
      if (!factor) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        m(i, j) = F.sub(m(i, j), F.mul(factor, m(c, j)));
        r(i, j) = F.sub(r(i, j), F.mul(factor, r(c, j)));
      }
    }
  }
  return r;
}

bool Matrix::is_scalar() const {
  if (n_ == 0) return true;
  Code d = a_[0];
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if ((*this)(i, j) != (i == j ? d : 0)) return false;
  return true;
}

std::size_t Matrix::rank() const {
  const ff::Field& F = *f_;
  std::vector<Code> m = a_;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n_ && r < n_; ++c) {
    std::size_t piv = n_;
    for (std::size_t i = r; i < n_; ++i)
      if (m[i * n_ + c]) {
        piv = i;
        break;
      }
    if (piv == n_) continue;
    for (std::size_t j = 0; j < n_; ++j) std::swap(m[piv * n_ + j], m[r * n_ + j]);
    Code pinv = F.inv(m[r * n_ + c]);
    for (std::size_t i = r + 1; i < n_; ++i) {
      Code factor = F.mul(m[i * n_ + c], pinv);
      if (!factor) continue;
      for (std::size_t j = c; j < n_; ++j) m[i * n_ + j] = F.sub(m[i * n_ + j], F.mul(factor, m[r * n_ + j]));
    }
    ++r;
  }
  return r;
}

std::size_t Matrix::hash() const {
  std::uint64_t h = 1469598103934665603ull ^ n_;
  for (auto c : a_) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < n_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < n_; ++j) os << (j ? "," : "") << f_->to_string((*this)(i, j));
    os << ']';
  }
  os << ']';
  return os.str();
}

Vec times(const Vec& v, const Matrix& a) {
  if (v.size() != a.n()) throw std::invalid_argument("vector length does not match matrix");
  const ff::Field& F = *a.field();
  Vec r(a.n(), 0);
  for (std::size_t i = 0; i < a.n(); ++i) {
    if (!v[i]) continue;
    for (std::size_t j = 0; j < a.n(); ++j) r[j] = F.add(r[j], F.mul(v[i], a(i, j)));
  }
  return r;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  if (!ff::same_field(a.field(), b.field())) throw std::invalid_argument("direct sum over different fields");
  Matrix r(a.field(), a.n() + b.n());
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.n(); ++i)
    for (std::size_t j = 0; j < b.n(); ++j) r(a.n() + i, a.n() + j) = b(i, j);
  return r;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a.inverse() * b.inverse() * a * b; }

Matrix conjugate(const Matrix& a, const Matrix& g) { return g.inverse() * a * g; }

std::uint64_t matrix_order(const Matrix& a, std::uint64_t cap) {
  Matrix x = a;
  for (std::uint64_t k = 1; k <= cap; ++k) {
    if (x.is_identity()) return k;
    x = x * a;
  }
  throw std::runtime_error("matrix order exceeds search cap");
}

Poly char_poly(const Matrix& a) {
  const FieldPtr& f = a.field();
  const ff::Field& F = *f;
  const std::size_t n = a.n();
  Matrix h = a;
  // Similarity transform to upper Hessenberg form.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = n;
    for (std::size_t i = m; i < n; ++i)
      if (h(i, m - 1)) {
        piv = i;
        break;
      }
    if (piv == n) continue;
    if (piv != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(piv, j), h(m, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, piv), h(i, m));
    }
    Code pinv = F.inv(h(m, m - 1));
    for (std::size_t i = m + 1; i < n; ++i) {
      Code u = F.mul(h(i, m - 1), pinv);
      if (!u) continue;
      for (std::size_t j = 0; j < n; ++j) h(i, j) = F.sub(h(i, j), F.mul(u, h(m, j)));
      for (std::size_t r = 0; r < n; ++r) h(r, m) = F.add(h(r, m), F.mul(u, h(r, i)));
    }
  }
  // p_k = char poly of the leading k x k block.
  std::vector<Poly> p;
  p.push_back(Poly::constant(f, 1));
  const Poly x = Poly::x(f);
  for (std::size_t m = 1; m <= n; ++m) {
    Poly pm = (x - Poly::constant(f, h(m - 1, m - 1))) * p[m - 1];
    Code t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = F.mul(t, h(m - i, m - i - 1));
      Code c = F.mul(t, h(m - i - 1, m - 1));
      if (c) pm = pm - p[m - i - 1].scaled(c);
    }
    p.push_back(std::move(pm));
  }
  return p[n];
}

Matrix evaluate(const Poly& f, const Matrix& a) {
  Matrix r(a.field(), a.n());
  for (std::size_t i = f.coeffs().size(); i-- > 0;) r = r * a + Matrix::scalar(a.field(), a.n(), f.coeffs()[i]);
  return r;
}

Matrix companion_matrix(const Poly& f) {
  if (!f.is_monic() || f.degree() < 1) throw std::invalid_argument("companion matrix needs a monic polynomial of positive degree");
  const std::size_t n = static_cast<std::size_t>(f.degree());
  const ff::Field& F = *f.field();
  Matrix c(f.field(), n);
  for (std::size_t i = 0; i + 1 < n; ++i) c(i, i + 1) = 1;
  // f = x^n - sum beta_{i+1} x^i, so beta_{i+1} = -coeff(i).
  for (std::size_t j = 0; j < n; ++j) c(n - 1, j) = F.neg(f.coeff(j));
  return c;
}

Matrix hypercompanion_matrix(const Poly& f, unsigned k) {
  if (k == 0) throw std::invalid_argument("hypercompanion matrix needs k >= 1");
  if (!f.is_monic() || f.degree() < 1 || !ff::poly_is_irreducible(f))
    throw std::invalid_argument("hypercompanion matrix needs a monic irreducible polynomial");
  const Matrix c = companion_matrix(f);
  const std::size_t n = c.n();
  Matrix h(f.field(), n * k);
  for (unsigned b = 0; b < k; ++b) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) h(b * n + i, b * n + j) = c(i, j);
    // E_{n,1} in the block to the right: last row, first column.
    if (b + 1 < k) h(b * n + n - 1, (b + 1) * n) = 1;
  }
  return h;
}

}  // namespace ncg::mat
