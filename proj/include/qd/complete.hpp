#pragma once

#include "qd/config.hpp"
#include "qd/layer_region.hpp"

namespace qd {

// Labels for the boundary edges (order of lr.e4()) and the free interior
// horizontal edges (order of lr.e1()).
struct BoundaryData {
    std::vector<uint8_t> a;  // E4
    std::vector<uint8_t> g;  // E1
};

int boundary_holonomy_left(const LayerRegion& lr, const std::vector<uint8_t>& a,
                           const GroupTable& G);
int boundary_holonomy_right(const LayerRegion& lr, const std::vector<uint8_t>& a,
                            const GroupTable& G);

// The unique admissible configuration extending (a, g), filled layer by layer:
// interior verticals left-to-right up to the pivot column, then right-to-left,
// then the pivot edge of the junction row. Throws NoCompletionError when the
// two boundary holonomies disagree (then no extension exists for any g).
Configuration complete_from_boundary(const LayerRegion& lr, const BoundaryData& bd,
                                     const GroupTable& G);

}  // namespace qd
