#include "qd/config.hpp"

#include <stdexcept>

namespace qd {

bool plaquette_admissible(const Configuration& c, const std::array<int, 4>& idx,
                          const GroupTable& G) {
    return G.mul(c[idx[0]], c[idx[1]]) == G.mul(c[idx[2]], c[idx[3]]);
}

bool is_admissible(const Configuration& c, const Region& region, const GroupTable& G) {
    if (c.size() != region.num_edges()) throw std::invalid_argument("label count mismatch");
    for (const Plaquette& p : region.plaquettes()) {
        if (!plaquette_admissible(c, region.plaquette_edge_indices(p), G)) return false;
    }
    return true;
}

bool next_configuration(Configuration& c, int order) {
    for (auto& digit : c) {
        if (++digit < order) return true;
        digit = 0;
    }
    return false;
}

uint64_t pack_configuration(const Configuration& c, int order) {
    uint64_t code = 0;
    for (size_t i = c.size(); i-- > 0;) code = code * uint64_t(order) + c[i];
    return code;
}

Configuration unpack_configuration(uint64_t code, size_t n, int order) {
    Configuration c(n);
    for (size_t i = 0; i < n; ++i) {
        c[i] = uint8_t(code % order);
        code /= order;
    }
    return c;
}

Configuration restrict_configuration(const Configuration& c, const Region& parent,
                                     const Region& sub) {
    Configuration out(sub.num_edges());
    for (size_t i = 0; i < sub.num_edges(); ++i) {
        int j = parent.edge_index(sub.edges()[i]);
        if (j < 0) throw std::invalid_argument("restriction: edge not in parent region");
        out[i] = c[j];
    }
    return out;
}

}  // namespace qd
