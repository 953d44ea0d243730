#pragma once

#include <vector>

#include "qd/geometry.hpp"
#include "qd/group.hpp"
#include "qd/rational.hpp"
#include "qd/region.hpp"

namespace qd {

// A local operator: a dense |G|^k x |G|^k matrix of exact rationals over the
// configurations of its k support edges. Basis index is little-endian base
// |G| over the support edges in their listed (canonical) order.
struct LocalOperator {
    std::vector<Edge> support;
    std::vector<Rat> matrix;  // row-major, matrix[row * dim + col] = <row|B|col>
    size_t dim_ = 0;

    size_t dim() const { return dim_; }
    const Rat& at(size_t row, size_t col) const { return matrix[row * dim_ + col]; }
    Rat& at(size_t row, size_t col) { return matrix[row * dim_ + col]; }

    static LocalOperator zero(std::vector<Edge> support, int group_order);
    static LocalOperator identity_on(std::vector<Edge> support, int group_order);
};

// Support index of the labels `c` (over `region`) restricted to op.support.
size_t support_index(const LocalOperator& op, const std::vector<uint8_t>& c,
                     const Region& region, int group_order);

// The four edges incident to v: left, down, up, right (canonical-ish order).
std::array<Edge, 4> star_edges(Vec2 v);

// The gauge transformation at v as a permutation operator on its 4-edge star:
// labels of edges leaving v are left-multiplied by g, labels of edges
// entering v are right-multiplied by g^-1.
LocalOperator gauge_operator(Vec2 v, int g, const GroupTable& G);

// A_v = (1/|G|) sum_g A_v^{(g)}.
LocalOperator vertex_projector(Vec2 v, const GroupTable& G);

// B_p: the diagonal projector onto admissible 4-edge configurations.
LocalOperator plaquette_projector(const Plaquette& p, const GroupTable& G);

// |h><k| on the given support.
LocalOperator ketbra(std::vector<Edge> support, const std::vector<uint8_t>& h,
                     const std::vector<uint8_t>& k, int group_order);

// Random integer-entry operator with entries in [-3, 3], deterministic in seed.
LocalOperator random_integer_operator(std::vector<Edge> support, int group_order, uint64_t seed);

}  // namespace qd
