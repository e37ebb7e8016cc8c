#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ncg/permgroup.hpp"

namespace ncg::perm {

struct ConjugacyClass {
  // Lexicographically least element of the class.
  Permutation rep;
  std::uint64_t size = 0;
  std::uint64_t centralizer_order = 0;
  std::uint64_t element_order = 0;
};

struct ClassData {
  // Sorted by element order, then by representative.
  std::vector<ConjugacyClass> classes;
  // For each prime p dividing |G|: power_maps[p][i] is the class of rep_i^p.
  std::map<std::uint64_t, std::vector<std::size_t>> power_maps;
};

// Throws CapExceeded when |G| > cap.
ClassData conjugacy_classes(const PermGroup& g, std::uint64_t cap = 10'000'000);

enum class CentralizerMethod { automatic, enumeration, orbit };

// C_G(x).  Enumeration scans every element (|G| <= 1e5 under automatic); the
// orbit method walks the conjugacy class of x and feeds Schreier generators of
// the conjugation action into a stabiliser chain until it reaches |G|/|x^G|.
// Throws std::invalid_argument unless x is in G, CapExceeded when |G| > cap.
PermGroup centralizer(const PermGroup& g, const Permutation& x, std::uint64_t cap = 10'000'000,
                      CentralizerMethod method = CentralizerMethod::automatic);
// Size of the conjugacy class of x, by orbit enumeration.
std::uint64_t class_size(const PermGroup& g, const Permutation& x, std::uint64_t cap = 10'000'000);

PermGroup center(const PermGroup& g, std::uint64_t cap = 10'000'000);
// All elements of a group (via its stabiliser chain); CapExceeded beyond cap.
std::vector<Permutation> group_elements(const PermGroup& g, std::uint64_t cap = 10'000'000);

}  // namespace ncg::perm
