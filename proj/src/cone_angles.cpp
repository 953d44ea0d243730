#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "qd/boundary_walk.hpp"
#include "qd/cone.hpp"
#include "qd/errors.hpp"

namespace qd {

namespace {

constexpr double kEps = 1e-9;

struct Sector {
    double ax, ay;    // apex
    double e1x, e1y;  // boundary directions
    double e2x, e2y;
    std::optional<int> M0;

    bool contains_point(double px, double py) const {
        const double dx = px - ax, dy = py - ay;
        const double n = std::abs(dx) + std::abs(dy);
        if (n < kEps) return true;
        const double c1 = e1x * dy - e1y * dx;  // >= 0: on the CCW side of e1
        const double c2 = dx * e2y - dy * e2x;  // >= 0: on the CW side of e2
        return c1 >= -kEps * (n + 1) && c2 >= -kEps * (n + 1);
    }

    // Square S_(a,b) lies in the cone (and above the lower cut if present).
    bool square(int a, int b) const {
        if (M0 && b < *M0) return false;
        return contains_point(a, b) && contains_point(a + 1, b) && contains_point(a, b + 1) &&
               contains_point(a + 1, b + 1);
    }
};

// Walks the region boundary from `start` (counterclockwise keeps the region
// on the left) and returns the visited vertices, stopping once the walk
// leaves the box |x|,|y| <= box or after the step cap.
std::vector<Vec2> trace_boundary(const Sector& sec, Vec2 start, bool ccw, int box) {
    static const Vec2 dirs[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    auto walkable = [&](Vec2 v, Vec2 d) {
        Vec2 l = left_square_of(v, d), r = right_square_of(v, d);
        const bool lo = sec.square(l.x, l.y), ro = sec.square(r.x, r.y);
        return ccw ? (lo && !ro) : (ro && !lo);
    };
    std::vector<Vec2> out{start};
    Vec2 v = start, incoming{0, 0};
    const size_t cap = size_t(64) * (box + 2);
    for (size_t n = 0; n < cap; ++n) {
        Vec2 next{0, 0};
        int found = 0;
        for (Vec2 d : dirs) {
            if (d.x == -incoming.x && d.y == -incoming.y && (incoming.x || incoming.y)) continue;
            if (walkable(v, d)) {
                next = d;
                ++found;
            }
        }
        if (found != 1) throw GeometryError("cone boundary trace failed");
        v = v + next;
        incoming = next;
        out.push_back(v);
        if (std::abs(v.x) > box || std::abs(v.y) > box) return out;
    }
    throw GeometryError("cone boundary trace did not leave the window");
}

StaircasePath staircase_from_trace(const std::vector<Vec2>& verts) {
    if (verts.size() < 2) throw GeometryError("trace too short");
    // Maximal runs of equal unit steps.
    std::vector<std::pair<Vec2, int>> runs;
    for (size_t i = 0; i + 1 < verts.size(); ++i) {
        Vec2 d = verts[i + 1] - verts[i];
        if (!runs.empty() && runs.back().first == d)
            ++runs.back().second;
        else
            runs.push_back({d, 1});
    }
    int vy = 0, hx = 0;
    for (auto& [d, len] : runs) {
        if (d.y != 0) {
            if (vy && d.y != vy) throw GeometryError("trace is not vertically monotone");
            vy = d.y;
        } else {
            if (hx && d.x != hx) throw GeometryError("trace is not horizontally monotone");
            hx = d.x;
        }
    }
    if (vy == 0) vy = 1;  // pure horizontal trace
    if (hx == 0) hx = 1;  // pure vertical trace
    StairClass cls = vy > 0 ? (hx > 0 ? StairClass::UpRight : StairClass::UpLeft)
                            : (hx > 0 ? StairClass::DownRight : StairClass::DownLeft);

    std::vector<StairSegment> segments;
    size_t i = 0;
    while (i < runs.size()) {
        StairSegment s;
        if (runs[i].first.y != 0) s.m = runs[i].second, ++i;
        if (i < runs.size() && runs[i].first.y == 0) s.l = runs[i].second, ++i;
        segments.push_back(s);
    }
    StairTail tail = runs.back().first.y != 0 ? StairTail::Vertical : StairTail::Horizontal;
    // Normalize pure rays to the canonical representations.
    if (segments.size() == 1 && segments[0].l == 0)
        return StaircasePath(cls, verts.front(), {}, StairTail::Vertical);
    if (segments.size() == 1 && segments[0].m == 0)
        return StaircasePath(cls, verts.front(), {}, StairTail::Horizontal);
    return StaircasePath(cls, verts.front(), std::move(segments), tail);
}

}  // namespace

ConeFromAngles cone_from_angles(double theta1, double theta2, double apex_x, double apex_y,
                                int max_N) {
    if (!(theta1 >= -kEps && theta1 < M_PI / 2))
        throw std::invalid_argument("theta1 must lie in [0, pi/2)");
    if (!(theta2 - theta1 > kEps))
        throw std::invalid_argument("theta2 must exceed theta1");
    if (!(theta2 - theta1 < M_PI - kEps))
        throw std::invalid_argument("the opening angle must be < pi");
    if (apex_x < -kEps || apex_x > 1 + kEps || apex_y < -kEps || apex_y > 1 + kEps)
        throw std::invalid_argument("apex must lie in [0,1]^2");

    const int kase = theta2 < M_PI / 2 - kEps ? 1 : (theta2 <= M_PI + kEps ? 2 : 3);
    int n0 = 1, m0 = 1;
    if (kase != 2) {
        const double t = std::tan(theta2);
        if (t <= kEps) throw std::invalid_argument("tan(theta2) must be positive");
        n0 = t > 1 + kEps ? 1 : int(std::floor(1.0 / t)) + 1;
    }

    Sector sec{apex_x, apex_y, std::cos(theta1), std::sin(theta1), std::cos(theta2),
               std::sin(theta2), std::nullopt};

    const int box = max_N * std::max(n0, m0) + 8;

    if (kase != 3) {
        // Lower cut: the first row with at least three full cone squares.
        int M = int(std::floor(apex_y)) - 1;
        for (;; ++M) {
            if (M > box) throw GeometryError("no row with three cone squares in the window");
            int count = 0;
            for (int a = -box; a < box; ++a)
                if (sec.square(a, M)) ++count;
            if (count >= 3) break;
        }
        sec.M0 = M;
    }

    // N0: every row of the truncation carries at least three cone squares,
    // stable over a three-wide check horizon.
    auto row_count = [&](int M, int N) {
        int count = 0;
        for (int a = -N * n0; a < N * n0; ++a)
            if (sec.square(a, M)) ++count;
        return count;
    };
    auto ok = [&](int N) {
        const int lo = sec.M0 ? *sec.M0 : -N * m0;
        for (int M = lo; M < N * m0; ++M)
            if (row_count(M, N) < 3) return false;
        return true;
    };
    int N0 = -1;
    for (int N = 3; N + 2 <= std::max(max_N + 2, 16); ++N) {
        if (ok(N) && ok(N + 1) && ok(N + 2)) {
            N0 = N;
            break;
        }
    }
    if (N0 < 0) throw GeometryError("could not certify N0 in the window");

    Vec2 v0;
    std::vector<Vec2> p1_trace, p2_trace;
    if (kase != 3) {
        int a0 = -box;
        while (a0 <= box && !sec.square(a0, *sec.M0)) ++a0;
        v0 = {a0, *sec.M0};
        p1_trace = trace_boundary(sec, v0, /*ccw=*/true, box);
        p2_trace = trace_boundary(sec, v0, /*ccw=*/false, box);
    } else {
        // The boundary is one up-right monotone staircase through the apex;
        // split it at the horizontal-to-vertical corner nearest the apex.
        int xhat = int(std::floor(apex_x)) - box / 2;
        int bhat = -box;
        while (bhat <= box && !sec.square(xhat, bhat)) ++bhat;
        if (bhat > box) throw GeometryError("no cone square in the start column");
        auto walk = trace_boundary(sec, {xhat, bhat}, /*ccw=*/true, box);
        int best = -1;
        long best_dist = std::numeric_limits<long>::max();
        for (size_t i = 1; i + 1 < walk.size(); ++i) {
            Vec2 din = walk[i] - walk[i - 1], dout = walk[i + 1] - walk[i];
            if (din.x == 1 && dout.y == 1) {
                long dist = std::lround(std::abs(walk[i].x - apex_x) * 2) +
                            std::lround(std::abs(walk[i].y - apex_y) * 2);
                if (dist < best_dist) {
                    best_dist = dist;
                    best = int(i);
                }
            }
        }
        if (best < 0) throw GeometryError("no corner vertex near the apex");
        v0 = walk[best];
        p1_trace.assign(walk.begin() + best, walk.end());
        p2_trace.assign(walk.rend() - best - 1, walk.rend());
    }

    ConeFromAngles out{v0, staircase_from_trace(p1_trace), staircase_from_trace(p2_trace),
                       n0, m0, N0, sec.M0};
    return out;
}

}  // namespace qd
