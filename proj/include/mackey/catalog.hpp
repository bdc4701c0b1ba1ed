#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "mackey/group.hpp"

namespace mackey {

// Builds a named permutation group from a spec string:
//   C<n>          cyclic of order n, as the n-cycle on n points
//   S<n>          symmetric group on n points
//   A<n>          alternating group on n points
//   D<n>          dihedral group of order 2n on n points, n >= 3
//   EA(p,k)       elementary abelian of order p^k, k disjoint p-cycles
//   Q8            quaternion group of order 8, regular representation
//   <a>x<b>x...   direct product on disjoint point sets
//   file:<path>   generators read from a file (standalone spec only)
// The nominal order is checked against max_order before any enumeration;
// file-backed specs are guarded by the element budget instead.  The spec
// string becomes the group's name.
FiniteGroup build_group(const std::string& spec,
                        std::size_t max_order = kDefaultElementBudget);

// Parses the generator file format: first significant line "degree N",
// then one permutation per line in 1-based disjoint cycle notation, "()"
// for the identity; '#' starts a comment line.
std::pair<unsigned, std::vector<Permutation>> parse_generators(const std::string& text);

// Canonical text form: cycles ordered by least moved point, fixed points
// omitted, identity as "()".  parse_generators round-trips it exactly.
std::string format_generators(unsigned degree, const std::vector<Permutation>& generators);

// Human-readable description of the spec grammar, the file format and the
// built-in verification set.  Stable across runs.
std::string catalog_listing();

// The specs exercised by "verify --group catalog".
std::vector<std::string> builtin_verification_specs();

} // namespace mackey
