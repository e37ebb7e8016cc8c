#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ncg/finfield.hpp"
#include "ncg/poly.hpp"

namespace ncg::mat {

using ff::Code;
using ff::FieldPtr;
using ff::Poly;

// Row vector.  Matrices act on the right: v -> v A.
using Vec = std::vector<Code>;

// Dense n x n matrix over a finite field, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr f, std::size_t n) : f_(std::move(f)), n_(n), a_(n * n, 0) {}

  static Matrix identity(const FieldPtr& f, std::size_t n);
  static Matrix scalar(const FieldPtr& f, std::size_t n, Code c);
  static Matrix diagonal(const FieldPtr& f, const std::vector<Code>& d);
  static Matrix from_rows(const FieldPtr& f, const std::vector<Vec>& rows);
  // E_{i,j}: 1 in position (i, j), zero elsewhere (0-based).
  static Matrix unit(const FieldPtr& f, std::size_t n, std::size_t i, std::size_t j);

  const FieldPtr& field() const { return f_; }
  std::size_t n() const { return n_; }
  Code operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  Code& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  Vec row(std::size_t i) const { return Vec(a_.begin() + static_cast<std::ptrdiff_t>(i * n_), a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_)); }
  const std::vector<Code>& data() const { return a_; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(Code c) const;
  Matrix pow(std::int64_t e) const;
  Matrix transpose() const;
  // Entrywise a -> a^(p^e); with p^e = q on GF(q^2) this is sigma.
  Matrix frobenius(unsigned e) const;
  Code det() const;
  // Throws std::domain_error when singular.
  Matrix inverse() const;
  bool is_scalar() const;
  bool is_identity() const { return is_scalar() && (n_ == 0 || a_[0] == 1); }
  std::size_t rank() const;

  bool operator==(const Matrix& o) const { return n_ == o.n_ && a_ == o.a_ && ff::same_field(f_, o.f_); }
  bool operator<(const Matrix& o) const { return a_ < o.a_; }
  std::size_t hash() const;
  std::string to_string() const;

 private:
  FieldPtr f_;
  std::size_t n_ = 0;
  std::vector<Code> a_;
};

struct MatrixHash {
  std::size_t operator()(const Matrix& m) const { return m.hash(); }
};

Vec times(const Vec& v, const Matrix& a);
Matrix direct_sum(const Matrix& a, const Matrix& b);
// a^-1 b^-1 a b
Matrix commutator(const Matrix& a, const Matrix& b);
// g^-1 a g
Matrix conjugate(const Matrix& a, const Matrix& g);
// Multiplicative order of an invertible matrix, by powering (cap on the search).
std::uint64_t matrix_order(const Matrix& a, std::uint64_t cap = 1u << 24);

// Characteristic polynomial det(x I - A) via reduction to Hessenberg form.
Poly char_poly(const Matrix& a);
// f(A)
Matrix evaluate(const Poly& f, const Matrix& a);

// For f = x^n - b_n x^(n-1) - ... - b_1: rows 0..n-2 carry the
// sub-identity and the last row is (b_1, ..., b_n).  char_poly(C(f)) = f.
Matrix companion_matrix(const Poly& f);
// Block upper-bidiagonal: C(f) on the diagonal, E_{n,1} on the superdiagonal.
// f must be monic irreducible; char_poly = f^k.
Matrix hypercompanion_matrix(const Poly& f, unsigned k);

// Text format: header "n q" (entries in GF(q)) or "n q q2" (entries in
// GF(q^2)); then n rows of n entries.  Entries are integers for prime fields
// and coefficient tuples "(c0,c1,...)" for extension fields; a bare integer in
// an extension field denotes an element of the prime subfield.
Matrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const Matrix& a, bool over_q_squared = false);

}  // namespace ncg::mat
