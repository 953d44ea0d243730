#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "qd/geometry.hpp"

namespace qd {

// A finite set of Z^2 edges together with everything derived from it:
// the vertex set, the plaquettes whose four edges are all present, and the
// vertices adjacent (through any Z^2 edge) to a vertex outside the set.
// Edges are kept in canonical order so configurations index into them.
class Region {
  public:
    Region() = default;
    static Region from_edges(std::vector<Edge> edges);

    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Plaquette>& plaquettes() const { return plaquettes_; }
    const std::vector<Vec2>& vertices() const { return vertices_; }
    const std::vector<Vec2>& boundary_vertices() const { return boundary_vertices_; }

    int edge_index(const Edge& e) const;            // -1 if absent
    bool has_edge(const Edge& e) const { return edge_index(e) >= 0; }
    bool has_vertex(Vec2 v) const { return vertex_set_.count(v) > 0; }

    // Edge indices of a plaquette in the order bottom, right, left, top,
    // matching the flatness condition label(b)*label(r) == label(l)*label(t).
    std::array<int, 4> plaquette_edge_indices(const Plaquette& p) const;

    size_t num_edges() const { return edges_.size(); }

  private:
    std::vector<Edge> edges_;
    std::vector<Plaquette> plaquettes_;
    std::vector<Vec2> vertices_;
    std::vector<Vec2> boundary_vertices_;
    std::unordered_map<Edge, int, EdgeHash> edge_index_;
    std::unordered_map<Vec2, char, Vec2Hash> vertex_set_;
};

// The rectangle Lambda_N^{(n0,m0)} = [-N*n0, N*n0] x [-N*m0, N*m0]:
// its full edge set, plus the edges forming the boundary rectangle.
struct RectangleRegion {
    int N = 0, n0 = 0, m0 = 0;
    Region region;
    std::vector<Edge> boundary_edges;  // the edges of the perimeter lines
    std::vector<char> is_boundary_edge;  // indexed like region.edges()

    int xmax() const { return N * n0; }
    int ymax() const { return N * m0; }
    bool vertex_on_perimeter(Vec2 v) const {
        return v.x == -xmax() || v.x == xmax() || v.y == -ymax() || v.y == ymax();
    }
    bool contains_vertex(Vec2 v) const {
        return v.x >= -xmax() && v.x <= xmax() && v.y >= -ymax() && v.y <= ymax();
    }
};

RectangleRegion rectangle_region(int N, int n0, int m0);

}  // namespace qd
