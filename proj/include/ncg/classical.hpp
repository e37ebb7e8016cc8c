#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "ncg/matrix.hpp"

namespace ncg::mat {

class UnitarySpace;

// GF(q) for a prime power q.  Throws std::invalid_argument otherwise.
FieldPtr field_of_order(std::uint64_t q);

// Group orders; throw std::overflow_error beyond 64 bits.
std::uint64_t order_gl(unsigned n, std::uint64_t q);
std::uint64_t order_sl(unsigned n, std::uint64_t q);
std::uint64_t order_psl(unsigned n, std::uint64_t q);
std::uint64_t order_pgl(unsigned n, std::uint64_t q);
std::uint64_t order_su(unsigned n, std::uint64_t q);
std::uint64_t order_psu(unsigned n, std::uint64_t q);

// Calls fn on every element of SL(n, F) (or GL(n, F)), in a fixed order.
// Throws CapExceeded when the group order exceeds cap.
void for_each_special_linear(const FieldPtr& f, unsigned n, const std::function<void(const Matrix&)>& fn,
                             std::uint64_t cap = 10'000'000);
void for_each_general_linear(const FieldPtr& f, unsigned n, const std::function<void(const Matrix&)>& fn,
                             std::uint64_t cap = 10'000'000);
std::vector<Matrix> enumerate_special_linear(const FieldPtr& f, unsigned n, std::uint64_t cap = 10'000'000);
std::vector<Matrix> enumerate_general_linear(const FieldPtr& f, unsigned n, std::uint64_t cap = 10'000'000);

// Elementary transvections I + w^k E_ij (k < degree of F over its prime field).
std::vector<Matrix> special_linear_generators(const FieldPtr& f, unsigned n);
// special_linear_generators plus diag(w, 1, ..., 1).
std::vector<Matrix> general_linear_generators(const FieldPtr& f, unsigned n);

// Uniformly random element of SU(n, q): a random orthonormal frame with the
// last row rescaled to determinant 1.
Matrix random_special_unitary(const UnitarySpace& space, std::mt19937_64& rng);

// All elements of the group generated by gens (BFS closure).  Throws
// CapExceeded when more than cap elements appear.
std::vector<Matrix> matrix_group_closure(const std::vector<Matrix>& gens, std::uint64_t cap = 10'000'000);

// Scales v so its first nonzero entry is 1.
Vec normalize_projective(const ff::Field& f, Vec v);
// Normalized representatives of the 1-spaces of F^n, in code order.
std::vector<Vec> projective_points(const FieldPtr& f, unsigned n);
// Normalized representatives of the singular 1-spaces of a unitary space.
std::vector<Vec> isotropic_points(const UnitarySpace& space);

}  // namespace ncg::mat
