#pragma once

#include "qd/cone.hpp"
#include "qd/group.hpp"

namespace qd {

// Values on the boundary vertices of V(S) (order of ct.pt_domain()),
// normalized to the identity at v0.
using BoundaryPotential = std::vector<uint8_t>;

// Values on the loop edges E4 (canonical order of ct.interior().e4()).
using BoundaryConfiguration = std::vector<uint8_t>;

// Membership in FB: the two boundary-path holonomies agree.
bool in_fb(const ConeTruncation& ct, const BoundaryConfiguration& a, const GroupTable& G);

// The edge potential along the loop: w -> Psi_{q_w}(a) for every loop vertex,
// well-defined for a in FB. Values keyed by vertex.
std::unordered_map<Vec2, int, Vec2Hash> loop_potential(const ConeTruncation& ct,
                                                       const BoundaryConfiguration& a,
                                                       const GroupTable& G);

// The boundary potential of an admissible interior configuration:
// Psi^{v0}(k) restricted to the boundary vertices.
BoundaryPotential boundary_potential_of(const ConeTruncation& ct, const Configuration& k,
                                        const GroupTable& G);

// The bijection PT x G^{|J|} -> FB. When J is nonempty, u lists the values on
// J minus the pivot vertex (sorted order) followed by the label of the first
// pivot edge; when J is empty, u must be empty. `pivot_choice` selects which
// J vertex is the pivot (the bijection does not depend on it).
BoundaryConfiguration xi(const ConeTruncation& ct, const BoundaryPotential& t,
                         const std::vector<uint8_t>& u, const GroupTable& G,
                         size_t pivot_choice = 0);

// Inverse of xi: recovers (t, u) from a member of FB.
std::pair<BoundaryPotential, std::vector<uint8_t>> xi_inverse(const ConeTruncation& ct,
                                                              const BoundaryConfiguration& a,
                                                              const GroupTable& G,
                                                              size_t pivot_choice = 0);

// |{k in C_{E(S)} : boundary potential of k == t}| = |G|^(|J|+|E1|),
// independent of t. The verified variant recomputes it by filtering the
// constructive enumeration.
uint64_t count_by_boundary_potential(const ConeTruncation& ct, const GroupTable& G);
uint64_t count_by_boundary_potential_verified(const ConeTruncation& ct,
                                              const BoundaryPotential& t, const GroupTable& G);

}  // namespace qd
