#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace ncg::ff {

// An element of GF(p^k) is identified with the integer sum c_i p^i of its
// coefficient vector (c_0, ..., c_{k-1}) with respect to the field modulus.
using Code = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// GF(p^k) with a deterministic modulus: the least monic irreducible polynomial
// of degree k over GF(p) when polynomials are compared by their coefficient
// code (highest non-leading coefficient most significant).  Multiplication and
// addition go through log/exp and Zech tables, so construction is capped at
// q <= 2^16.
class Field {
 public:
  static constexpr std::uint64_t kMaxOrder = 1u << 16;

  // Same (p, k) always returns the same shared instance.
  static FieldPtr make(std::uint64_t p, unsigned k);

  std::uint64_t p() const { return p_; }
  unsigned k() const { return k_; }
  std::uint32_t q() const { return q_; }
  // Coefficients (c_0, ..., c_k) over GF(p), monic.
  const std::vector<Code>& modulus() const { return modulus_; }

  Code add(Code a, Code b) const;
  Code sub(Code a, Code b) const { return add(a, neg(b)); }
  Code neg(Code a) const { return neg_[a]; }
  Code mul(Code a, Code b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Code inv(Code a) const;
  Code div(Code a, Code b) const { return mul(a, inv(b)); }
  Code pow(Code a, std::int64_t e) const;

  // Image of an integer in the prime subfield.
  Code from_int(std::int64_t v) const;
  std::vector<Code> digits(Code a) const;
  Code from_digits(const std::vector<Code>& d) const;

  // Least code of multiplicative order q - 1.
  Code primitive() const { return primitive_; }
  // Discrete log to base primitive(); a must be nonzero.
  std::uint32_t log(Code a) const;
  Code exp(std::uint64_t e) const { return exp_[e % (q_ - 1)]; }
  std::uint32_t order(Code a) const;
  // a^(p^times)
  Code frobenius(Code a, unsigned times = 1) const;

  // Decimal for prime fields, coefficient tuple "(c0,c1,...)" otherwise.
  std::string to_string(Code a) const;

  bool operator==(const Field& o) const { return p_ == o.p_ && k_ == o.k_; }

 private:
  Field(std::uint64_t p, unsigned k);

  std::uint64_t p_;
  unsigned k_;
  std::uint32_t q_;
  std::vector<Code> modulus_;
  Code primitive_ = 1;
  std::vector<Code> exp_;           // length 2(q-1), exp_[i] = g^i
  std::vector<std::uint32_t> log_;  // log_[0] unused
  std::vector<std::int32_t> zech_;  // zech_[i] = log(1 + g^i), or -1 if zero
  std::vector<Code> neg_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);

// Value wrapper pairing a code with its field, for readable scalar code.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldPtr f, Code c) : f_(std::move(f)), c_(c) {}

  const FieldPtr& field() const { return f_; }
  Code code() const { return c_; }
  bool is_zero() const { return c_ == 0; }
  bool is_one() const { return c_ == 1; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator-() const { return {f_, f_->neg(c_)}; }
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement pow(std::int64_t e) const { return {f_, f_->pow(c_, e)}; }
  FieldElement inverse() const { return {f_, f_->inv(c_)}; }
  bool operator==(const FieldElement& o) const { return c_ == o.c_ && same_field(f_, o.f_); }
  std::string to_string() const { return f_->to_string(c_); }

 private:
  FieldPtr f_;
  Code c_ = 0;
};

FieldPtr field_make(std::uint64_t p, unsigned k);
FieldElement primitive_element(const FieldPtr& f);
// Multiplicative order; throws std::domain_error for zero.
std::uint32_t element_order(const FieldElement& x);

bool is_prime(std::uint64_t n);
// Prime factors of n without multiplicity, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
// Returns (p, k) with q = p^k, or throws std::invalid_argument.
std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t q);

}  // namespace ncg::ff
