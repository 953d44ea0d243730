#include "qd/complete.hpp"

#include "qd/errors.hpp"

namespace qd {

namespace {

int holonomy_on_e4(const LayerRegion& lr, const PathOfEdges& p, const std::vector<uint8_t>& a,
                   const GroupTable& G) {
    std::unordered_map<Edge, int, EdgeHash> label;
    label.reserve(lr.e4().size() * 2);
    for (size_t i = 0; i < lr.e4().size(); ++i) label[lr.e4()[i]] = a[i];
    return holonomy_with(p, G, [&](const Edge& e) { return label.at(e); });
}

struct Fill {
    const LayerRegion& lr;
    const GroupTable& G;
    Configuration labels;
    std::vector<char> assigned;

    Fill(const LayerRegion& lr_, const GroupTable& G_)
        : lr(lr_), G(G_), labels(lr_.region().num_edges(), 0),
          assigned(lr_.region().num_edges(), 0) {}

    void set(const Edge& e, int g) {
        int i = lr.region().edge_index(e);
        labels[i] = uint8_t(g);
        assigned[i] = 1;
    }

    // Solves the single unassigned edge of S_(x,y) from b*r == l*t.
    void solve_square(int x, int y) {
        Plaquette p{{x, y}};
        auto idx = lr.region().plaquette_edge_indices(p);
        int missing = -1;
        for (int k = 0; k < 4; ++k) {
            if (!assigned[idx[k]]) {
                if (missing >= 0) throw std::logic_error("square has two unknown edges");
                missing = k;
            }
        }
        if (missing < 0) throw std::logic_error("square already fully labeled");
        const int b = labels[idx[0]], r = labels[idx[1]], l = labels[idx[2]], t = labels[idx[3]];
        int v;
        switch (missing) {
            case 0: v = G.mul(G.mul(l, t), G.inv(r)); break;  // b = l t r^-1
            case 1: v = G.mul(G.inv(b), G.mul(l, t)); break;  // r = b^-1 l t
            case 2: v = G.mul(b, G.mul(r, G.inv(t))); break;  // l = b r t^-1
            default: v = G.mul(G.inv(l), G.mul(b, r)); break; // t = l^-1 b r
        }
        labels[idx[missing]] = uint8_t(v);
        assigned[idx[missing]] = 1;
    }

    bool square_consistent(int x, int y) const {
        auto idx = lr.region().plaquette_edge_indices(Plaquette{{x, y}});
        return G.mul(labels[idx[0]], labels[idx[1]]) == G.mul(labels[idx[2]], labels[idx[3]]);
    }
};

}  // namespace

int boundary_holonomy_left(const LayerRegion& lr, const std::vector<uint8_t>& a,
                           const GroupTable& G) {
    return holonomy_on_e4(lr, lr.left_path(), a, G);
}

int boundary_holonomy_right(const LayerRegion& lr, const std::vector<uint8_t>& a,
                            const GroupTable& G) {
    return holonomy_on_e4(lr, lr.right_path(), a, G);
}

Configuration complete_from_boundary(const LayerRegion& lr, const BoundaryData& bd,
                                     const GroupTable& G) {
    if (bd.a.size() != lr.e4().size() || bd.g.size() != lr.e1().size())
        throw std::invalid_argument("boundary data sizes do not match the region");
    if (boundary_holonomy_right(lr, bd.a, G) != boundary_holonomy_left(lr, bd.a, G))
        throw NoCompletionError("boundary holonomies disagree; no admissible extension");

    Fill fill(lr, G);
    for (size_t i = 0; i < lr.e4().size(); ++i) fill.set(lr.e4()[i], bd.a[i]);
    for (size_t i = 0; i < lr.e1().size(); ++i) fill.set(lr.e1()[i], bd.g[i]);

    const int l = lr.num_layers();
    const int y0 = lr.base_y();
    for (int i = 0; i < l; ++i) {
        const LayerRow& row = lr.rows()[i];
        const int y = y0 + i;
        const bool last = (i == l - 1);
        const int w = last ? row.x_end() + 1 : lr.junctions()[i].w;

        for (int x = row.x_start; x + 1 <= w - 1; ++x) fill.solve_square(x, y);
        if (!last) {
            for (int x = row.x_end(); x >= w; --x) fill.solve_square(x, y);
            fill.solve_square(w - 1, y);  // determines the pivot edge f^(m)
        }
    }
    // The last square of the top layer closes by the holonomy precondition.
    if (!fill.square_consistent(lr.rows().back().x_end(), y0 + l - 1))
        throw std::logic_error("final square inconsistent despite matching holonomies");
    for (char f : fill.assigned)
        if (!f) throw std::logic_error("fill left an edge unassigned");
    return std::move(fill.labels);
}

}  // namespace qd
