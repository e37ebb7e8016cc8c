#include <sstream>
#include <stdexcept>

#include "ncg/unitary.hpp"

namespace ncg::mat {

namespace {

// Reduced row echelon form, zero rows dropped.
std::vector<Vec> rref(const ff::Field& F, std::vector<Vec> rows, std::size_t n) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t piv = rows.size();
    for (std::size_t i = r; i < rows.size(); ++i)
      if (rows[i][c]) {
        piv = i;
        break;
      }
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    Code inv = F.inv(rows[r][c]);
    for (auto& x : rows[r]) x = F.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Code m = rows[i][c];
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = F.sub(rows[i][j], F.mul(m, rows[r][j]));
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

// Basis of {v : M v^T = 0} for the matrix with the given rows.
std::vector<Vec> nullspace(const ff::Field& F, const std::vector<Vec>& rows, std::size_t n) {
  auto red = rref(F, rows, n);
  std::vector<std::size_t> pivots;
  for (const auto& row : red) {
    for (std::size_t j = 0; j < n; ++j)
      if (row[j]) {
        pivots.push_back(j);
        break;
      }
  }
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> out;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < red.size(); ++i) v[pivots[i]] = F.neg(red[i][free]);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

Subspace Subspace::span(const FieldPtr& f, std::size_t n, const std::vector<Vec>& vectors) {
  for (const auto& v : vectors)
    if (v.size() != n) throw std::invalid_argument("vector length does not match ambient dimension");
  Subspace s(f, n);
  s.basis_ = rref(*f, vectors, n);
  return s;
}

bool Subspace::contains(const Vec& v) const {
  auto rows = basis_;
  rows.push_back(v);
  return rref(*f_, rows, n_).size() == basis_.size();
}

Subspace Subspace::join(const Subspace& o) const {
  auto rows = basis_;
  rows.insert(rows.end(), o.basis_.begin(), o.basis_.end());
  return span(f_, n_, rows);
}

Subspace Subspace::perp(const UnitarySpace& space) const {
  // <v, w> = v . sigma(w), so v-perp is the nullspace of the rows sigma(w).
  std::vector<Vec> rows;
  for (const auto& w : basis_) rows.push_back(space.sigma(w));
  Subspace s(f_, n_);
  s.basis_ = rref(*f_, nullspace(*f_, rows, n_), n_);
  return s;
}

bool Subspace::is_totally_singular(const UnitarySpace& space) const {
  for (const auto& u : basis_)
    for (const auto& v : basis_)
      if (space.form(u, v) != 0) return false;
  return true;
}

bool Subspace::is_nondegenerate(const UnitarySpace& space) const {
  auto rad = perp(space);
  std::vector<Vec> rows = basis_;
  // Radical = this intersect this-perp; nondegenerate iff dimensions add up.
  rows.insert(rows.end(), rad.basis_.begin(), rad.basis_.end());
  return rref(*f_, rows, n_).size() == basis_.size() + rad.basis_.size();
}

bool Subspace::is_stabilized_by(const Matrix& a) const {
  for (const auto& v : basis_)
    if (!contains(times(v, a))) return false;
  return true;
}

std::optional<Code> Subspace::scalar_action(const Matrix& a) const {
  if (basis_.empty()) return Code{1};
  std::optional<Code> c;
  for (const auto& v : basis_) {
    Vec w = times(v, a);
    std::size_t lead = 0;
    while (v[lead] == 0) ++lead;
    Code s = f_->div(w[lead], v[lead]);
    for (std::size_t j = 0; j < n_; ++j)
      if (w[j] != f_->mul(s, v[j])) return std::nullopt;
    if (c && *c != s) return std::nullopt;
    c = s;
  }
  return c;
}

std::string Subspace::to_string() const {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    os << (i ? ", " : "") << '(';
    for (std::size_t j = 0; j < n_; ++j) os << (j ? "," : "") << f_->to_string(basis_[i][j]);
    os << ')';
  }
  os << '>';
  return os.str();
}

}  // namespace ncg::mat
