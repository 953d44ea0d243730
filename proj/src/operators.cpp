#include "qd/operators.hpp"

#include <random>
#include <stdexcept>

namespace qd {

LocalOperator LocalOperator::zero(std::vector<Edge> support, int group_order) {
    size_t d = 1;
    for (size_t i = 0; i < support.size(); ++i) d *= size_t(group_order);
    LocalOperator op;
    op.support = std::move(support);
    op.matrix.assign(d * d, Rat(0));
    op.dim_ = d;
    return op;
}

LocalOperator LocalOperator::identity_on(std::vector<Edge> support, int group_order) {
    LocalOperator op = zero(std::move(support), group_order);
    const size_t d = op.dim();
    for (size_t i = 0; i < d; ++i) op.at(i, i) = 1;
    return op;
}

size_t support_index(const LocalOperator& op, const std::vector<uint8_t>& c,
                     const Region& region, int group_order) {
    size_t idx = 0;
    for (size_t i = op.support.size(); i-- > 0;) {
        int e = region.edge_index(op.support[i]);
        if (e < 0) throw std::invalid_argument("operator support outside the region");
        idx = idx * size_t(group_order) + c[e];
    }
    return idx;
}

std::array<Edge, 4> star_edges(Vec2 v) {
    return {h_edge(v.x - 1, v.y), v_edge(v.x, v.y - 1), v_edge(v.x, v.y), h_edge(v.x, v.y)};
}

namespace {

// Star labels packed little-endian in star_edges order.
std::array<int, 4> unpack4(size_t idx, int n) {
    std::array<int, 4> out;
    for (int i = 0; i < 4; ++i) {
        out[i] = int(idx % n);
        idx /= n;
    }
    return out;
}

size_t pack4(const std::array<int, 4>& labels, int n) {
    size_t idx = 0;
    for (int i = 3; i >= 0; --i) idx = idx * n + size_t(labels[i]);
    return idx;
}

}  // namespace

LocalOperator gauge_operator(Vec2 v, int g, const GroupTable& G) {
    auto edges = star_edges(v);
    LocalOperator op = LocalOperator::zero({edges.begin(), edges.end()}, G.order());
    const int n = G.order();
    const size_t d = op.dim();
    for (size_t col = 0; col < d; ++col) {
        auto k = unpack4(col, n);
        // star_edges order: incoming left, incoming down, outgoing up, outgoing right.
        std::array<int, 4> img = {G.mul(k[0], G.inv(g)), G.mul(k[1], G.inv(g)),
                                  G.mul(g, k[2]), G.mul(g, k[3])};
        op.at(pack4(img, n), col) = 1;
    }
    return op;
}

LocalOperator vertex_projector(Vec2 v, const GroupTable& G) {
    auto edges = star_edges(v);
    LocalOperator op = LocalOperator::zero({edges.begin(), edges.end()}, G.order());
    const Rat w(1, G.order());
    for (int g = 0; g < G.order(); ++g) {
        LocalOperator ag = gauge_operator(v, g, G);
        for (size_t i = 0; i < op.matrix.size(); ++i) op.matrix[i] += w * ag.matrix[i];
    }
    return op;
}

LocalOperator plaquette_projector(const Plaquette& p, const GroupTable& G) {
    std::vector<Edge> edges{p.bottom(), p.right(), p.left(), p.top()};
    LocalOperator op = LocalOperator::zero(std::move(edges), G.order());
    const int n = G.order();
    for (size_t i = 0; i < op.dim(); ++i) {
        auto k = unpack4(i, n);  // b, r, l, t
        if (G.mul(k[0], k[1]) == G.mul(k[2], k[3])) op.at(i, i) = 1;
    }
    return op;
}

LocalOperator ketbra(std::vector<Edge> support, const std::vector<uint8_t>& h,
                     const std::vector<uint8_t>& k, int group_order) {
    LocalOperator op = LocalOperator::zero(std::move(support), group_order);
    size_t row = 0, col = 0;
    for (size_t i = op.support.size(); i-- > 0;) {
        row = row * group_order + h[i];
        col = col * group_order + k[i];
    }
    op.at(row, col) = 1;
    return op;
}

LocalOperator random_integer_operator(std::vector<Edge> support, int group_order, uint64_t seed) {
    LocalOperator op = LocalOperator::zero(std::move(support), group_order);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (Rat& x : op.matrix) x = entry(rng);
    return op;
}

}  // namespace qd
