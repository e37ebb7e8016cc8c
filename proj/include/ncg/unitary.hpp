#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncg/matrix.hpp"

namespace ncg::mat {

// GF(q^2)^n with the sesquilinear form <u, v> = sum u_i v_i^q (Gram matrix I_n).
class UnitarySpace {
 public:
  UnitarySpace(unsigned n, std::uint32_t q);

  unsigned n() const { return n_; }
  std::uint32_t q() const { return q_; }
  // GF(q^2)
  const FieldPtr& field() const { return f_; }
  Code sigma(Code a) const { return f_->pow(a, q_); }
  Vec sigma(const Vec& v) const;
  Code form(const Vec& u, const Vec& v) const;
  // (A^sigma)^T
  Matrix sigma_transpose(const Matrix& a) const;
  // Solutions of c^(q+1) = n for n in GF(q)^x; returns the one of least log.
  Code norm_root(Code n) const;

 private:
  unsigned n_;
  std::uint32_t q_;
  unsigned frob_exp_;  // q = p^frob_exp_
  FieldPtr f_;
};

// A subspace stored by its reduced row echelon basis, so equal subspaces have
// identical bases.
class Subspace {
 public:
  Subspace(FieldPtr f, std::size_t n) : f_(std::move(f)), n_(n) {}
  static Subspace span(const FieldPtr& f, std::size_t n, const std::vector<Vec>& vectors);

  const FieldPtr& field() const { return f_; }
  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  bool contains(const Vec& v) const;
  Subspace join(const Subspace& o) const;
  // {v : <v, w> = 0 for all w in this}
  Subspace perp(const UnitarySpace& space) const;
  bool is_totally_singular(const UnitarySpace& space) const;
  bool is_nondegenerate(const UnitarySpace& space) const;
  // True iff v A lies in the subspace for every basis vector v.
  bool is_stabilized_by(const Matrix& a) const;
  // Some c with v A = c v for all v in the subspace, if A acts as a scalar.
  std::optional<Code> scalar_action(const Matrix& a) const;

  bool operator==(const Subspace& o) const { return n_ == o.n_ && basis_ == o.basis_; }
  std::string to_string() const;

 private:
  FieldPtr f_;
  std::size_t n_;
  std::vector<Vec> basis_;
};

// det(A) = 1 and A A^(sigma T) = I.  Throws std::invalid_argument when A is not
// n x n over GF(q^2).
bool in_special_unitary(const Matrix& a, const UnitarySpace& space);

// lambda = omega^(q-1) for the primitive element omega of GF(q^2).
Code unitary_lambda(const UnitarySpace& space);

// diag(lambda^-(n-1), lambda, ..., lambda) when (q+1) does not divide n;
// none otherwise.
std::optional<Matrix> unitary_scalar_witness_nondegenerate(const UnitarySpace& space);

struct SingularWitnessParams {
  Code gamma;
  Code delta;
};
SingularWitnessParams singular_witness_params(const UnitarySpace& space);
// The 2x2 block (1+gd, g; -g d^2, 1-gd) plus I_{n-2}; fixes <d e1 + e2, e3, ..., en>
// pointwise.
Matrix unitary_scalar_witness_singular(const UnitarySpace& space);

// I + a (v^sigma)^T v with a = -gamma*delta: a unitary transvection that fixes
// v-perp pointwise.  v must be nonzero and singular.
Matrix unitary_transvection(const UnitarySpace& space, const Vec& v);
// lambda on w-perp and lambda^-(n-1) on w; w must be non-singular.
Matrix unitary_hyperplane_scalar(const UnitarySpace& space, const Vec& w);

// Every element of SU(n, q), enumerated row by row from orthonormal vectors.
// Throws CapExceeded if |SU(n, q)| > cap.
std::vector<Matrix> enumerate_special_unitary(const UnitarySpace& space, std::uint64_t cap = 10'000'000);

struct StabilizerSearch {
  std::optional<Matrix> witness;
  // "hyperplane-singular", "hyperplane-nondegenerate", "exhaustive"
  std::string method;
  std::uint64_t elements_searched = 0;
};

// A non-scalar element of SU(n, q) acting as a scalar on each subspace in
// delta.  Uses a transvection when span(delta)^perp contains a singular
// vector, the hyperplane scalar matrix when span(delta) is a non-degenerate
// hyperplane and (q+1) does not divide n, and exhaustive search otherwise.
StabilizerSearch pointwise_stabilizer_search(const UnitarySpace& space, const std::vector<Subspace>& delta,
                                             std::uint64_t cap = 10'000'000);
std::optional<Matrix> pointwise_stabilizer_nontrivial(const UnitarySpace& space, const std::vector<Subspace>& delta,
                                                      std::uint64_t cap = 10'000'000);

}  // namespace ncg::mat
