#include "qd/boundary_walk.hpp"

#include "qd/errors.hpp"

namespace qd {

Vec2 left_square_of(Vec2 v, Vec2 d) {
    if (d.x == 1) return {v.x, v.y};
    if (d.x == -1) return {v.x - 1, v.y - 1};
    if (d.y == 1) return {v.x - 1, v.y};
    return {v.x, v.y - 1};
}

Vec2 right_square_of(Vec2 v, Vec2 d) {
    if (d.x == 1) return {v.x, v.y - 1};
    if (d.x == -1) return {v.x - 1, v.y};
    if (d.y == 1) return {v.x, v.y};
    return {v.x - 1, v.y - 1};
}

static Edge edge_from(Vec2 v, Vec2 d, int& sign) {
    if (d.x == 1) { sign = +1; return h_edge(v.x, v.y); }
    if (d.x == -1) { sign = -1; return h_edge(v.x - 1, v.y); }
    if (d.y == 1) { sign = +1; return v_edge(v.x, v.y); }
    sign = -1;
    return v_edge(v.x, v.y - 1);
}

PathOfEdges boundary_walk_ccw(const SquarePredicate& occupied, Vec2 start, size_t max_steps,
                              bool stop_at_start) {
    static const Vec2 dirs[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    auto walkable = [&](Vec2 v, Vec2 d) {
        Vec2 l = left_square_of(v, d), r = right_square_of(v, d);
        return occupied(l.x, l.y) && !occupied(r.x, r.y);
    };

    PathOfEdges path(start);
    Vec2 v = start;
    Vec2 incoming{0, 0};
    for (size_t n = 0; n < max_steps; ++n) {
        Vec2 next{0, 0};
        int found = 0;
        for (Vec2 d : dirs) {
            if (d.x == -incoming.x && d.y == -incoming.y && (incoming.x || incoming.y)) continue;
            if (walkable(v, d)) {
                next = d;
                ++found;
            }
        }
        if (found == 0) throw GeometryError("boundary walk dead-ends at " + to_string(v));
        if (found > 1) throw GeometryError("boundary pinches at " + to_string(v));
        int sign;
        Edge e = edge_from(v, next, sign);
        path.push(e, sign);
        v = path.target();
        incoming = next;
        if (stop_at_start && v == start) return path;
    }
    if (stop_at_start) throw GeometryError("boundary walk did not close");
    return path;
}

}  // namespace qd
