#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ncg/finfield.hpp"

namespace ncg::ff {

// Univariate polynomial over a Field; coeffs()[i] is the coefficient of x^i and
// the leading coefficient is nonzero (the zero polynomial has no coefficients).
class Poly {
 public:
  explicit Poly(FieldPtr f) : f_(std::move(f)) {}
  Poly(FieldPtr f, std::vector<Code> coeffs);

  static Poly constant(const FieldPtr& f, Code c);
  static Poly monomial(const FieldPtr& f, Code c, unsigned deg);
  static Poly x(const FieldPtr& f) { return monomial(f, 1, 1); }
  // x^n - b
  static Poly binomial(const FieldPtr& f, unsigned n, Code b);

  const FieldPtr& field() const { return f_; }
  const std::vector<Code>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Code coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  Code leading() const { return c_.empty() ? 0 : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(Code s) const;
  // Quotient and remainder; throws std::domain_error on division by zero.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly operator/(const Poly& d) const { return divmod(d).first; }
  Poly operator%(const Poly& d) const { return divmod(d).second; }
  Poly monic() const;
  Poly derivative() const;
  Code eval(Code a) const;

  bool operator==(const Poly& o) const { return same_field(f_, o.f_) && c_ == o.c_; }
  // Ordering by degree, then coefficients from the top; used for canonical sets.
  bool operator<(const Poly& o) const;

  // e.g. "x^2 + 3*x + 1"; extension-field coefficients print as tuples.
  std::string to_string() const;

 private:
  void normalize();
  FieldPtr f_;
  std::vector<Code> c_;
};

Poly gcd(Poly a, Poly b);  // monic, or zero
Poly powmod(Poly base, std::uint64_t e, const Poly& m);

// Irreducibility over the coefficient field.  f must be monic of degree >= 1
// (std::invalid_argument otherwise).  Uses the gcd(f, x^(q^i) - x) criterion
// for i <= deg/2, which is equivalent to the absence of factors of degree at
// most deg/2.
bool poly_is_irreducible(const Poly& f);

// The irreducible factors of x^(q-1) - a over GF(q): the polynomials x^r - b
// with r the multiplicative order of a and b^((q-1)/r) = a.  Sorted by b.
std::vector<Poly> binomial_factors(const FieldPtr& f, const FieldElement& a);

}  // namespace ncg::ff
