#pragma once

#include <cstdint>
#include <vector>

#include "qd/group.hpp"
#include "qd/region.hpp"

namespace qd {

// An assignment edge -> group element over a region's edge set, stored as
// element indices in canonical edge order.
using Configuration = std::vector<uint8_t>;

// Flatness on every plaquette: label(bottom)*label(right) == label(left)*label(top).
bool is_admissible(const Configuration& c, const Region& region, const GroupTable& G);

// Same check restricted to one plaquette (edge indices must all be >= 0).
bool plaquette_admissible(const Configuration& c, const std::array<int, 4>& idx,
                          const GroupTable& G);

// Mixed-radix counter over |G|^n states, digit 0 fastest. Returns false on wrap.
bool next_configuration(Configuration& c, int order);

// Little-endian packing in canonical edge order, base |G| (for keys and sets).
uint64_t pack_configuration(const Configuration& c, int order);
Configuration unpack_configuration(uint64_t code, size_t n, int order);

// Restriction of `c` to the edges of `sub` (every sub edge must be in `parent`).
Configuration restrict_configuration(const Configuration& c, const Region& parent,
                                     const Region& sub);

}  // namespace qd
