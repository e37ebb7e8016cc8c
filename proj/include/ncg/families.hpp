#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ncg/permgroup.hpp"

namespace ncg::perm {

inline constexpr std::size_t kMaxFamilyDegree = 10'000;
inline constexpr std::uint64_t kMaxFamilyOrder = 100'000'000;

// A named group: family "alt", "sym", "psl", "pgl", "psu", "mathieu" with
// integer parameters, or "file" with a path.
struct GroupSpec {
  std::string family;
  std::vector<std::uint64_t> params;
  std::string path;

  // Canonical text form, e.g. "psl:2:11" or "file:gens.txt".
  std::string to_string() const;
  // Conventional name, e.g. "A5", "PSL(2,11)", "M11".
  std::string display_name() const;
};

// Parses "alt:5", "sym:7", "psl:2:11", "pgl:2:7", "psu:3:3", "mathieu:11",
// "file:path" (long forms "alternating", "symmetric", "from_file" accepted).
// Throws ParseError for malformed text, Unsupported for an unknown family.
GroupSpec parse_group_spec(std::string_view text);

// Closed-form order, or none for file groups.
std::optional<std::uint64_t> expected_order(const GroupSpec& spec);

// Throws Unsupported for unknown families or parameters, CapExceeded beyond
// degree 1e4 or order 1e8, and std::logic_error if the constructed order
// disagrees with the closed form.
PermGroup make_group(const GroupSpec& spec);

PermGroup alternating_group(unsigned n);
PermGroup symmetric_group(unsigned n);
// Action on the projective points of GF(q)^n.
PermGroup psl_group(unsigned n, std::uint64_t q);
PermGroup pgl_group(unsigned n, std::uint64_t q);
// Action on the singular points of the unitary space GF(q^2)^n.
PermGroup psu_group(unsigned n, std::uint64_t q);
PermGroup mathieu_group(unsigned m);

// Text format: a header "degree k", then one generator per line in 0-based
// disjoint-cycle notation; '#' starts a comment.  Throws ParseError.
PermGroup read_group(std::istream& in, const std::string& name = "file");
// Throws IoError when the file cannot be opened.
PermGroup read_group_file(const std::string& path);

}  // namespace ncg::perm
