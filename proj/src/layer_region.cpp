#include "qd/layer_region.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "qd/boundary_walk.hpp"
#include "qd/errors.hpp"

namespace qd {

bool LayerRegion::contains_square(int a, int b) const {
    int i = b - base_y();
    if (i < 0 || i >= num_layers()) return false;
    return a >= rows_[i].x_start && a <= rows_[i].x_end();
}

LayerRegion LayerRegion::from_rows(std::vector<LayerRow> rows) {
    if (rows.empty()) throw std::invalid_argument("layer region needs at least one row");
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].count < 1) throw std::invalid_argument("row count must be >= 1");
        if (i > 0 && rows[i].y != rows[i - 1].y + 1)
            throw std::invalid_argument("rows must be consecutive in y");
    }

    LayerRegion lr;
    lr.rows_ = std::move(rows);
    const int l = lr.num_layers();
    const int y0 = lr.base_y();

    for (int j = 0; j + 1 < l; ++j) {
        const LayerRow& a = lr.rows_[j];
        const LayerRow& b = lr.rows_[j + 1];
        LayerJunction jn;
        jn.z = std::max(a.x_start, b.x_start);
        jn.w = std::min(a.x_end(), b.x_end()) + 1;
        jn.z_tilde = std::min(a.x_start, b.x_start);
        jn.w_tilde = std::max(a.x_end(), b.x_end()) + 1;
        if (jn.z >= jn.w)
            throw ConditionSViolation("rows " + std::to_string(j) + "," + std::to_string(j + 1) +
                                      ": z=" + std::to_string(jn.z) +
                                      " >= w=" + std::to_string(jn.w));
        lr.junctions_.push_back(jn);
    }

    std::vector<Edge> all;
    for (int i = 0; i < l; ++i) {
        const LayerRow& r = lr.rows_[i];
        for (int a = r.x_start; a <= r.x_end(); ++a) {
            Plaquette p{{a, r.y}};
            all.push_back(p.bottom());
            all.push_back(p.top());
            all.push_back(p.left());
            all.push_back(p.right());
        }
    }
    lr.region_ = Region::from_edges(std::move(all));

    // Interior horizontal edges of junction rows split into E1 and the pivot E2;
    // the remaining pieces of those rows are boundary (E4).
    for (int j = 0; j + 1 < l; ++j) {
        const LayerJunction& jn = lr.junctions_[j];
        const int yrow = y0 + j + 1;
        for (int k = 1; k <= jn.M() - 1; ++k) lr.e1_.push_back(h_edge(jn.z + k - 1, yrow));
        lr.e2_.push_back(h_edge(jn.w - 1, yrow));
        for (int k = 1; k <= jn.z - jn.z_tilde; ++k)
            lr.e4_.push_back(h_edge(jn.z_tilde + k - 1, yrow));
        for (int k = 1; k <= jn.w_tilde - jn.w; ++k) lr.e4_.push_back(h_edge(jn.w + k - 1, yrow));
    }
    // Interior vertical edges of each layer.
    for (int i = 0; i < l; ++i) {
        const LayerRow& r = lr.rows_[i];
        for (int k = 1; k <= r.count - 1; ++k) lr.e3_.push_back(v_edge(r.x_start + k, y0 + i));
    }
    // Bottom and top lines, and the side verticals of each layer.
    for (int k = 0; k < lr.rows_.front().count; ++k)
        lr.e4_.push_back(h_edge(lr.rows_.front().x_start + k, y0));
    for (int k = 0; k < lr.rows_.back().count; ++k)
        lr.e4_.push_back(h_edge(lr.rows_.back().x_start + k, y0 + l));
    for (int i = 0; i < l; ++i) {
        lr.e4_.push_back(v_edge(lr.rows_[i].x_start, y0 + i));
        lr.e4_.push_back(v_edge(lr.rows_[i].x_end() + 1, y0 + i));
    }

    auto sort_edges = [](std::vector<Edge>& v) { std::sort(v.begin(), v.end(), canonical_less); };
    sort_edges(lr.e1_);
    sort_edges(lr.e2_);
    sort_edges(lr.e3_);
    sort_edges(lr.e4_);

    // The four classes must partition the edge set.
    size_t total = lr.e1_.size() + lr.e2_.size() + lr.e3_.size() + lr.e4_.size();
    if (total != lr.region_.num_edges())
        throw std::logic_error("edge classes do not partition the region");
    std::vector<char> seen(lr.region_.num_edges(), 0);
    for (auto* cls : {&lr.e1_, &lr.e2_, &lr.e3_, &lr.e4_}) {
        for (const Edge& e : *cls) {
            int i = lr.region_.edge_index(e);
            if (i < 0 || seen[i]) throw std::logic_error("edge class overlap");
            seen[i] = 1;
        }
    }

    // Boundary paths from the bottom-left corner of the first row to the
    // top-right corner of the last row, both ways around.
    const Vec2 start{lr.rows_.front().x_start, y0};
    const Vec2 goal{lr.rows_.back().x_end() + 1, y0 + l};
    auto occ = [&lr](int a, int b) { return lr.contains_square(a, b); };
    PathOfEdges cycle = boundary_walk_ccw(occ, start, 8 * lr.region_.num_edges());
    if (cycle.size() != lr.e4_.size()) throw std::logic_error("boundary cycle misses E4");

    PathOfEdges right(start), back(goal);
    bool reached = false;
    for (const Step& s : cycle.steps()) {
        if (!reached)
            right.push(s);
        else
            back.push(s);
        if (right.target() == goal) reached = true;
    }
    if (!reached) throw std::logic_error("boundary cycle does not reach the corner");
    lr.right_path_ = std::move(right);
    lr.left_path_ = inverse(back);
    return lr;
}

LayerRegion LayerRegion::from_squares(const std::vector<Plaquette>& squares) {
    if (squares.empty()) throw GeometryError("no squares");
    std::map<int, std::vector<int>> by_row;
    for (const Plaquette& p : squares) by_row[p.corner.y].push_back(p.corner.x);
    std::vector<LayerRow> rows;
    int expect_y = by_row.begin()->first;
    for (auto& [y, xs] : by_row) {
        if (y != expect_y++) throw GeometryError("square rows are not consecutive");
        std::sort(xs.begin(), xs.end());
        for (size_t i = 0; i + 1 < xs.size(); ++i)
            if (xs[i + 1] != xs[i] + 1) throw GeometryError("square row is not contiguous");
        rows.push_back({y, xs.front(), int(xs.size())});
    }
    return from_rows(std::move(rows));
}

LayerRegion layer_region_of_rectangle(const RectangleRegion& rr) {
    std::vector<LayerRow> rows;
    for (int b = -rr.ymax(); b < rr.ymax(); ++b)
        rows.push_back({b, -rr.xmax(), 2 * rr.xmax()});
    return LayerRegion::from_rows(std::move(rows));
}

}  // namespace qd
