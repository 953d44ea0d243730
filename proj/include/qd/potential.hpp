#pragma once

#include <unordered_map>

#include "qd/config.hpp"
#include "qd/layer_region.hpp"

namespace qd {

// The holonomy from a base vertex to every vertex of a region, well-defined
// for admissible configurations because holonomy is path-independent there.
struct VertexPotential {
    Vec2 base;
    std::unordered_map<Vec2, int, Vec2Hash> values;  // value(base) == identity

    int at(Vec2 v) const { return values.at(v); }
};

// Builds the potential by breadth-first traversal of a spanning tree and then
// verifies that every non-tree edge closes consistently; an inconsistent edge
// means `c` is not admissible and raises AdmissibilityError.
VertexPotential vertex_potential(const Region& region, const Configuration& c,
                                 const GroupTable& G, Vec2 base);

// Samples `samples` random vertex pairs of the region and, for each, two
// independently drawn lattice paths between them; returns true iff all
// holonomy pairs agree. Deterministic for a fixed seed.
bool path_independence_check(const Region& region, const Configuration& c, const GroupTable& G,
                             int samples, uint64_t seed);

// A uniformly random self-avoiding path (loop-erased walk) used by the check;
// exposed for tests that need an explicit violating pair.
PathOfEdges random_lattice_path(const Region& region, Vec2 from, Vec2 to, uint64_t seed);

}  // namespace qd
