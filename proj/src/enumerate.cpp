#include "qd/enumerate.hpp"

#include "qd/errors.hpp"

namespace qd {

uint64_t checked_pow(uint64_t base, uint64_t exp) {
    uint64_t out = 1;
    for (uint64_t i = 0; i < exp; ++i) {
        if (out > (uint64_t(1) << 62) / base) throw ResourceError("state count exceeds 2^62");
        out *= base;
    }
    return out;
}

static void check_budget(size_t edges, int order, uint64_t budget) {
    uint64_t states = 1;
    for (size_t i = 0; i < edges; ++i) {
        if (states > budget / order)
            throw ResourceError("raw state count exceeds the enumeration budget");
        states *= uint64_t(order);
    }
    if (states > budget) throw ResourceError("raw state count exceeds the enumeration budget");
}

std::vector<Configuration> enumerate_admissible_bruteforce(const Region& region,
                                                           const GroupTable& G, uint64_t budget) {
    check_budget(region.num_edges(), G.order(), budget);
    std::vector<std::array<int, 4>> plaq;
    plaq.reserve(region.plaquettes().size());
    for (const Plaquette& p : region.plaquettes()) plaq.push_back(region.plaquette_edge_indices(p));

    std::vector<Configuration> out;
    Configuration c(region.num_edges(), 0);
    do {
        bool ok = true;
        for (const auto& idx : plaq) {
            if (!plaquette_admissible(c, idx, G)) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(c);
    } while (next_configuration(c, G.order()));
    return out;
}

uint64_t count_admissible_bruteforce(const Region& region, const GroupTable& G, uint64_t budget) {
    check_budget(region.num_edges(), G.order(), budget);
    std::vector<std::array<int, 4>> plaq;
    for (const Plaquette& p : region.plaquettes()) plaq.push_back(region.plaquette_edge_indices(p));
    uint64_t count = 0;
    Configuration c(region.num_edges(), 0);
    do {
        bool ok = true;
        for (const auto& idx : plaq) {
            if (!plaquette_admissible(c, idx, G)) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
    } while (next_configuration(c, G.order()));
    return count;
}

void enumerate_admissible_fast(const LayerRegion& lr, const GroupTable& G,
                               const std::function<void(const Configuration&)>& emit) {
    const auto& e4 = lr.e4();
    const Step pivot_step = lr.right_path().steps().front();
    size_t pivot = size_t(-1);
    for (size_t i = 0; i < e4.size(); ++i)
        if (e4[i] == pivot_step.edge) pivot = i;
    if (pivot == size_t(-1)) throw std::logic_error("right path does not start on E4");

    // Right-path holonomy with the pivot label factored out:
    // Psi_r = label(pivot)^s * rest, so label(pivot)^s = Psi_l * rest^-1.
    PathOfEdges rest_path(pivot_step.to());
    for (size_t i = 1; i < lr.right_path().size(); ++i) rest_path.push(lr.right_path().steps()[i]);

    BoundaryData bd;
    bd.a.assign(e4.size(), 0);
    bd.g.assign(lr.e1().size(), 0);

    std::unordered_map<Edge, size_t, EdgeHash> e4_pos;
    for (size_t i = 0; i < e4.size(); ++i) e4_pos[e4[i]] = i;
    auto label = [&](const Edge& e) { return int(bd.a[e4_pos.at(e)]); };

    // Odometer over the free boundary edges (all but the pivot).
    std::vector<size_t> free_pos;
    for (size_t i = 0; i < e4.size(); ++i)
        if (i != pivot) free_pos.push_back(i);

    while (true) {
        const int psi_l = holonomy_with(lr.left_path(), G, label);
        const int rest = holonomy_with(rest_path, G, label);
        const int forced = G.mul(psi_l, G.inv(rest));
        bd.a[pivot] = uint8_t(pivot_step.sign > 0 ? forced : G.inv(forced));

        std::fill(bd.g.begin(), bd.g.end(), 0);
        while (true) {
            emit(complete_from_boundary(lr, bd, G));
            if (!next_configuration(bd.g, G.order())) break;
        }

        size_t k = 0;
        for (; k < free_pos.size(); ++k) {
            if (++bd.a[free_pos[k]] < G.order()) break;
            bd.a[free_pos[k]] = 0;
        }
        if (k == free_pos.size()) break;
    }
}

std::vector<Configuration> collect_admissible_fast(const LayerRegion& lr, const GroupTable& G) {
    std::vector<Configuration> out;
    enumerate_admissible_fast(lr, G, [&](const Configuration& c) { out.push_back(c); });
    return out;
}

uint64_t count_admissible_fast(const LayerRegion& lr, const GroupTable& G) {
    return checked_pow(uint64_t(G.order()), lr.e4().size() - 1 + lr.e1().size());
}

}  // namespace qd
