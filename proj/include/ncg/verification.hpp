#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncg/matrix.hpp"
#include "ncg/unitary.hpp"

namespace ncg::mat {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  std::string subject;
  std::vector<Check> checks;
  std::map<std::string, std::uint64_t> counts;

  void add(std::string name, bool pass, std::string detail = {});
  bool ok() const;
  const Check* find(const std::string& name) const;
};

// diag(l^-2, l, l), diag(l, l^-2, l), diag(l, l, l^-2) over GF(q^2) with
// l = w^(q-1), and the monomial conjugators taking the first to the others.
struct DiagonalTriple {
  Matrix b1, b2, b3;
  Matrix to_b2, to_b3;
};
DiagonalTriple diagonal_triple_matrices(std::uint32_t q);
// Membership in SU(3, q), non-centrality, and the two conjugations; with
// brute_force, also the commuting-conjugate and common-eigenline properties
// over all of SU(3, q).
VerificationReport verify_diagonal_triple(std::uint32_t q, bool brute_force = false);

// R = C(x^n - 1) over GF(q^2) and the involution A (I_{n-2} + -I_2 for odd q,
// I_{n-2} + swap for even q).
struct CyclicShiftPair {
  Matrix r, a;
};
CyclicShiftPair cyclic_shift_matrices(unsigned n, std::uint32_t q);
VerificationReport verify_cyclic_shift(unsigned n, std::uint32_t q);

// Generator of a Singer cycle and a matrix normalising it.  Over GF(Q) with
// Q = q (linear) or q^2 (unitary): S = C(f) for the least primitive
// polynomial f of degree n, and B maps x^i to x^(iQ) mod f, so B^-1 S B = S^Q.
struct SingerData {
  Matrix s;
  Matrix b;
  Poly f;
  std::uint64_t s_order = 0;
  // The line B stabilises (spanned by e_1).
  Vec fixed_line;
};
SingerData singer_normalizer_generators(unsigned n, std::uint32_t q, bool unitary);
// Order, conjugation relation, char poly of B, determinant of C(x^n - 1), and
// for small GL(n, q) the brute-force normaliser order n(q^n - 1).
VerificationReport verify_singer(unsigned n, std::uint32_t q, bool unitary);
// det C(x^n - 1) = (-1)^(n+1).
Code cyclic_companion_det(unsigned n, std::uint32_t q);

// Exhaustive sweep over SL(2, q): irreducible characteristic polynomial with
// A^(q-1) central occurs iff q = 3 mod 4, always with char poly x^2 + 1.
// Also sweeps SL(3, q) for q <= 4 for irreducible A with A^(q^2-1) central.
VerificationReport verify_sl2_irreducible(std::uint32_t q);

// Brute-force checks over H = SL(n, q) of the stabilisers of <e1> and <e2>:
// commutators in H_X are never non-identity scalars, C_H(H_X) = Z(H), and
// C_H(H_X and H_Y) equals H_X and H_Y when n = 2 or (n, q) = (3, 2), Z(H) otherwise.
VerificationReport verify_line_stabilisers(unsigned n, std::uint32_t q);

// Checks every constructed SU(n, q) witness: membership, non-scalarity and
// the claimed scalar action, plus an exhaustive cross-check of the (q+1) | n
// obstruction when SU(n, q) is small.
VerificationReport verify_unitary_witnesses(unsigned n, std::uint32_t q);

}  // namespace ncg::mat
