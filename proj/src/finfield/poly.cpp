#include "ncg/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ncg/errors.hpp"

namespace ncg::ff {

Poly::Poly(FieldPtr f, std::vector<Code> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
  for (auto c : c_)
    if (c >= f_->q()) throw std::invalid_argument("polynomial coefficient outside field");
  normalize();
}

void Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const FieldPtr& f, Code c) { return Poly(f, {c}); }

Poly Poly::monomial(const FieldPtr& f, Code c, unsigned deg) {
  std::vector<Code> v(deg + 1, 0);
  v[deg] = c;
  return Poly(f, std::move(v));
}

Poly Poly::binomial(const FieldPtr& f, unsigned n, Code b) {
  std::vector<Code> v(n + 1, 0);
  v[n] = 1;
  v[0] = f->add(v[0], f->neg(b));
  return Poly(f, std::move(v));
}

Poly Poly::operator+(const Poly& o) const {
  if (!same_field(f_, o.f_)) throw std::invalid_argument("polynomials over different fields");
  Poly r(f_);
  r.c_.assign(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = f_->add(coeff(i), o.coeff(i));
  r.normalize();
  return r;
}

Poly Poly::operator-() const {
  Poly r(f_);
  r.c_.reserve(c_.size());
  for (auto c : c_) r.c_.push_back(f_->neg(c));
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (!same_field(f_, o.f_)) throw std::invalid_argument("polynomials over different fields");
  Poly r(f_);
  if (c_.empty() || o.c_.empty()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      r.c_[i + j] = f_->add(r.c_[i + j], f_->mul(c_[i], o.c_[j]));
  }
  r.normalize();
  return r;
}

Poly Poly::scaled(Code s) const {
  Poly r(f_);
  for (auto c : c_) r.c_.push_back(f_->mul(c, s));
  r.normalize();
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (!same_field(f_, d.f_)) throw std::invalid_argument("polynomials over different fields");
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  Poly rem = *this;
  Poly quo(f_);
  if (rem.c_.size() < d.c_.size()) return {quo, rem};
  const std::size_t dd = d.c_.size() - 1;
  const Code lead_inv = f_->inv(d.c_.back());
  quo.c_.assign(rem.c_.size() - dd, 0);
  for (std::size_t top = rem.c_.size(); top-- > dd;) {
    Code c = f_->mul(rem.c_[top], lead_inv);
    if (c == 0) continue;
    std::size_t shift = top - dd;
    quo.c_[shift] = c;
    for (std::size_t i = 0; i <= dd; ++i)
      rem.c_[shift + i] = f_->sub(rem.c_[shift + i], f_->mul(c, d.c_[i]));
  }
  rem.normalize();
  quo.normalize();
  return {quo, rem};
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(f_->inv(leading()));
}

Poly Poly::derivative() const {
  Poly r(f_);
  for (std::size_t i = 1; i < c_.size(); ++i) r.c_.push_back(f_->mul(c_[i], f_->from_int(static_cast<std::int64_t>(i))));
  r.normalize();
  return r;
}

Code Poly::eval(Code a) const {
  Code r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = f_->add(f_->mul(r, a), c_[i]);
  return r;
}

bool Poly::operator<(const Poly& o) const {
  if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
  for (std::size_t i = c_.size(); i-- > 0;)
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  return false;
}

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    bool unit = c_[i] == 1;
    if (i == 0) {
      os << f_->to_string(c_[i]);
    } else {
      if (!unit) os << f_->to_string(c_[i]) << '*';
      os << 'x';
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly powmod(Poly base, std::uint64_t e, const Poly& m) {
  Poly r = Poly::constant(m.field(), 1) % m;
  base = base % m;
  while (e) {
    if (e & 1) r = (r * base) % m;
    e >>= 1;
    if (e) base = (base * base) % m;
  }
  return r;
}

bool poly_is_irreducible(const Poly& f) {
  if (!f.is_monic() || f.degree() < 1) throw std::invalid_argument("irreducibility test needs a monic polynomial of positive degree");
  const int n = f.degree();
  if (n == 1) return true;
  const FieldPtr& F = f.field();
  const Poly x = Poly::x(F);
  Poly h = x % f;
  for (int i = 1; i <= n / 2; ++i) {
    h = powmod(h, F->q(), f);
    if (gcd(f, h - x).degree() > 0) return false;
  }
  return true;
}

std::vector<Poly> binomial_factors(const FieldPtr& f, const FieldElement& a) {
  if (a.is_zero()) throw std::domain_error("binomial factorization needs a nonzero constant");
  if (!same_field(f, a.field())) throw std::invalid_argument("constant from a different field");
  if (f->q() > 128) throw CapExceeded("binomial factorization is capped at q <= 128");
  const std::uint32_t m = f->q() - 1;
  const std::uint32_t r = f->order(a.code());
  const std::int64_t t = m / r;
  std::vector<Poly> out;
  for (Code b = 1; b < f->q(); ++b)
    if (f->pow(b, t) == a.code()) out.push_back(Poly::binomial(f, r, b));
  return out;
}

}  // namespace ncg::ff
