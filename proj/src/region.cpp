#include "qd/region.hpp"

#include <algorithm>
#include <stdexcept>

namespace qd {

Region Region::from_edges(std::vector<Edge> edges) {
    std::sort(edges.begin(), edges.end(), canonical_less);
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    Region r;
    r.edges_ = std::move(edges);
    r.edge_index_.reserve(r.edges_.size() * 2);
    for (size_t i = 0; i < r.edges_.size(); ++i) r.edge_index_[r.edges_[i]] = int(i);

    for (const Edge& e : r.edges_) {
        r.vertex_set_.emplace(e.origin(), 1);
        r.vertex_set_.emplace(e.target(), 1);
    }
    r.vertices_.reserve(r.vertex_set_.size());
    for (auto& [v, _] : r.vertex_set_) r.vertices_.push_back(v);
    std::sort(r.vertices_.begin(), r.vertices_.end());

    // Candidate plaquettes: one per horizontal edge acting as a bottom.
    for (const Edge& e : r.edges_) {
        if (e.kind != EdgeKind::H) continue;
        Plaquette p{e.base};
        if (r.has_edge(p.right()) && r.has_edge(p.left()) && r.has_edge(p.top()))
            r.plaquettes_.push_back(p);
    }
    std::sort(r.plaquettes_.begin(), r.plaquettes_.end());

    for (Vec2 v : r.vertices_) {
        const Vec2 nbrs[4] = {{v.x + 1, v.y}, {v.x - 1, v.y}, {v.x, v.y + 1}, {v.x, v.y - 1}};
        for (Vec2 w : nbrs) {
            if (!r.has_vertex(w)) {
                r.boundary_vertices_.push_back(v);
                break;
            }
        }
    }
    return r;
}

int Region::edge_index(const Edge& e) const {
    auto it = edge_index_.find(e);
    return it == edge_index_.end() ? -1 : it->second;
}

std::array<int, 4> Region::plaquette_edge_indices(const Plaquette& p) const {
    return {edge_index(p.bottom()), edge_index(p.right()), edge_index(p.left()),
            edge_index(p.top())};
}

RectangleRegion rectangle_region(int N, int n0, int m0) {
    if (N < 1 || n0 < 1 || m0 < 1)
        throw std::invalid_argument("rectangle_region: sizes must be positive");
    RectangleRegion rr;
    rr.N = N;
    rr.n0 = n0;
    rr.m0 = m0;
    const int X = N * n0, Y = N * m0;
    std::vector<Edge> edges;
    edges.reserve(size_t(2 * X + 1) * (2 * Y + 1) * 2);
    for (int y = -Y; y <= Y; ++y)
        for (int x = -X; x < X; ++x) edges.push_back(h_edge(x, y));
    for (int y = -Y; y < Y; ++y)
        for (int x = -X; x <= X; ++x) edges.push_back(v_edge(x, y));
    rr.region = Region::from_edges(std::move(edges));

    rr.is_boundary_edge.assign(rr.region.num_edges(), 0);
    for (int x = -X; x < X; ++x) {
        for (int y : {-Y, Y}) {
            rr.boundary_edges.push_back(h_edge(x, y));
            rr.is_boundary_edge[rr.region.edge_index(h_edge(x, y))] = 1;
        }
    }
    for (int y = -Y; y < Y; ++y) {
        for (int x : {-X, X}) {
            rr.boundary_edges.push_back(v_edge(x, y));
            rr.is_boundary_edge[rr.region.edge_index(v_edge(x, y))] = 1;
        }
    }
    std::sort(rr.boundary_edges.begin(), rr.boundary_edges.end(), canonical_less);
    return rr;
}

}  // namespace qd
