#include "qd/cone.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_set>

#include "qd/boundary_walk.hpp"
#include "qd/errors.hpp"

namespace qd {

namespace {

// One counterclockwise (or clockwise) step along the perimeter of the rectangle.
Vec2 perimeter_step(const RectangleRegion& rect, Vec2 v, bool ccw) {
    const int X = rect.xmax(), Y = rect.ymax();
    if (ccw) {
        if (v.y == -Y && v.x < X) return {v.x + 1, v.y};
        if (v.x == X && v.y < Y) return {v.x, v.y + 1};
        if (v.y == Y && v.x > -X) return {v.x - 1, v.y};
        return {v.x, v.y - 1};
    }
    if (v.x == -X && v.y < Y) return {v.x, v.y + 1};
    if (v.y == Y && v.x < X) return {v.x + 1, v.y};
    if (v.x == X && v.y > -Y) return {v.x, v.y - 1};
    return {v.x - 1, v.y};
}

PathOfEdges perimeter_path(const RectangleRegion& rect, Vec2 from, Vec2 to, bool ccw) {
    if (!rect.vertex_on_perimeter(from) || !rect.vertex_on_perimeter(to))
        throw GeometryError("perimeter path endpoints must lie on the boundary");
    PathOfEdges path(from);
    Vec2 v = from;
    const size_t cap = size_t(4) * (2 * rect.xmax() + 2 * rect.ymax());
    for (size_t i = 0; v != to; ++i) {
        if (i > cap) throw GeometryError("perimeter walk did not reach target");
        Vec2 w = perimeter_step(rect, v, ccw);
        if (w.x == v.x + 1) path.push(h_edge(v.x, v.y), +1);
        else if (w.x == v.x - 1) path.push(h_edge(w.x, w.y), -1);
        else if (w.y == v.y + 1) path.push(v_edge(v.x, v.y), +1);
        else path.push(v_edge(w.x, w.y), -1);
        v = w;
    }
    return path;
}

bool square_in_grid(const RectangleRegion& rect, Vec2 sq) {
    return sq.x >= -rect.xmax() && sq.x < rect.xmax() && sq.y >= -rect.ymax() &&
           sq.y < rect.ymax();
}

std::pair<Vec2, Vec2> flanking_squares(const Edge& e) {
    if (e.kind == EdgeKind::H) return {{e.base.x, e.base.y}, {e.base.x, e.base.y - 1}};
    return {{e.base.x, e.base.y}, {e.base.x - 1, e.base.y}};
}

bool squares_share_edge(Vec2 a, Vec2 b) {
    return std::abs(a.x - b.x) + std::abs(a.y - b.y) == 1;
}

std::optional<Edge> common_edge(const Plaquette& a, const Plaquette& b) {
    const Edge ea[4] = {a.bottom(), a.right(), a.left(), a.top()};
    const Edge eb[4] = {b.bottom(), b.right(), b.left(), b.top()};
    std::optional<Edge> found;
    for (const Edge& x : ea)
        for (const Edge& y : eb)
            if (x == y) {
                if (found) return std::nullopt;
                found = x;
            }
    return found;
}

bool squares_touch(Vec2 a, Vec2 b) {
    return std::abs(a.x - b.x) <= 1 && std::abs(a.y - b.y) <= 1;
}

}  // namespace

ConeTruncation::ConeTruncation(Vec2 v0, StaircasePath p1, StaircasePath p2, int N, int n0,
                               int m0, int sigma)
    : v0_(v0), p1_(std::move(p1)), p2_(std::move(p2)), N_(N), n0_(n0), m0_(m0), sigma_(sigma) {
    if (sigma != +1 && sigma != -1) throw std::invalid_argument("sigma must be +-1");
    if (p1_.origin() != v0 || p2_.origin() != v0)
        throw GeometryError("both staircase paths must originate at v0");
    if (p1_ == p2_) throw GeometryError("p1 == p2: the loop degenerates");
    lambda_ = rectangle_region(N, n0, m0);
    if (!lambda_.contains_vertex(v0) || lambda_.vertex_on_perimeter(v0))
        throw GeometryError("v0 must lie strictly inside the rectangle");

    auto [p1N, w1] = p1_.truncate_at(lambda_);
    auto [p2N, w2] = p2_.truncate_at(lambda_);
    if (p1N.empty() || p2N.empty()) throw GeometryError("degenerate truncated path");

    PathOfEdges ell = perimeter_path(lambda_, w1, w2, sigma_ == +1);
    loop_ = compose(compose(p1N, ell), inverse(p2N));
    if (!loop_.is_simple_loop()) throw GeometryError("loop is not simple");

    loop_sign_.reserve(loop_.size() * 2);
    for (const Step& s : loop_.steps()) {
        if (!loop_sign_.emplace(s.edge, s.sign).second)
            throw GeometryError("loop repeats an edge");
    }

    // Squares enclosed by the loop, by even-odd crossings of a rightward ray.
    std::vector<Plaquette> inside;
    for (int b = -lambda_.ymax(); b < lambda_.ymax(); ++b) {
        for (int a = -lambda_.xmax(); a < lambda_.xmax(); ++a) {
            int crossings = 0;
            for (const Step& s : loop_.steps())
                if (s.edge.kind == EdgeKind::V && s.edge.base.y == b && s.edge.base.x > a)
                    ++crossings;
            if (crossings % 2 == 1) inside.push_back(Plaquette{{a, b}});
        }
    }
    if (inside.empty()) throw GeometryError("loop encloses no squares");
    interior_ = LayerRegion::from_squares(inside);

    // The loop edge set must be exactly the boundary class E4 of the interior.
    {
        std::vector<Edge> le;
        le.reserve(loop_.size());
        for (const Step& s : loop_.steps()) le.push_back(s.edge);
        std::sort(le.begin(), le.end(), canonical_less);
        if (le != interior_.e4()) throw GeometryError("loop does not bound the interior squares");
    }

    // BE: rectangle edges with exactly one endpoint among the interior's
    // vertices; OE: the rest. An edge with both endpoints in V(S) that is not
    // an interior edge would break the partition.
    const Region& iv = interior_.region();
    for (const Edge& e : lambda_.region.edges()) {
        const bool a = iv.has_vertex(e.origin()), b = iv.has_vertex(e.target());
        if (a && b) {
            if (!iv.has_edge(e)) throw GeometryError("chord edge across the interior boundary");
        } else if (a || b) {
            be_.push_back(e);
        } else {
            oe_.push_back(e);
        }
    }
    oe_region_ = Region::from_edges(oe_);

    // Transversal chain: walk (p1^{(N)})^{-1} p2^{(N)} and take, for each
    // edge, the flanking square outside the interior; insert the diagonal
    // square at corner turns.
    PathOfEdges rho = compose(inverse(p1N), p2N);
    auto in_S = [this](Vec2 sq) { return interior_.contains_square(sq.x, sq.y); };
    for (const Step& s : rho.steps()) {
        auto [f1, f2] = flanking_squares(s.edge);
        const bool i1 = in_S(f1), i2 = in_S(f2);
        if (i1 == i2) throw GeometryError("path edge not on the interior boundary");
        Vec2 out = i1 ? f2 : f1;
        if (!square_in_grid(lambda_, out)) continue;
        if (!transversal_.empty()) {
            Vec2 back = transversal_.back().corner;
            if (back == out) continue;
            if (!squares_share_edge(back, out)) {
                if (std::abs(back.x - out.x) != 1 || std::abs(back.y - out.y) != 1)
                    throw GeometryError("transversal chain jumps");
                Vec2 d1{back.x, out.y}, d2{out.x, back.y};
                const bool s1 = in_S(d1), s2 = in_S(d2);
                if (s1 == s2) throw GeometryError("ambiguous corner square");
                Vec2 corner = s1 ? d2 : d1;
                if (!square_in_grid(lambda_, corner))
                    throw GeometryError("corner square outside the rectangle");
                transversal_.push_back(Plaquette{corner});
            }
        }
        transversal_.push_back(Plaquette{out});
    }
    if (transversal_.empty()) throw GeometryError("no transversal squares");

    // Remark-style structural checks; e_0 .. e_M are recovered from the chain.
    std::unordered_set<Edge, EdgeHash> be_set(be_.begin(), be_.end());
    auto boundary_be_edge = [&](const Plaquette& sq) {
        std::vector<Edge> found;
        for (const Edge& e : {sq.bottom(), sq.right(), sq.left(), sq.top()}) {
            int idx = lambda_.region.edge_index(e);
            if (idx >= 0 && lambda_.is_boundary_edge[idx] && be_set.count(e)) found.push_back(e);
        }
        if (found.size() != 1)
            throw GeometryError("end square must carry exactly one boundary BE edge");
        return found.front();
    };
    shared_edges_.push_back(boundary_be_edge(transversal_.front()));
    for (size_t i = 0; i + 1 < transversal_.size(); ++i) {
        auto ce = common_edge(transversal_[i], transversal_[i + 1]);
        if (!ce) throw GeometryError("consecutive transversal squares share != 1 edge");
        int idx = lambda_.region.edge_index(*ce);
        if (!be_set.count(*ce) || idx < 0 || lambda_.is_boundary_edge[idx])
            throw GeometryError("shared transversal edge not an interior BE edge");
        shared_edges_.push_back(*ce);
    }
    shared_edges_.push_back(boundary_be_edge(transversal_.back()));

    {
        std::set<std::pair<int, int>> distinct;
        std::unordered_set<Edge, EdgeHash> se;
        for (const Edge& e : shared_edges_)
            if (!se.insert(e).second) throw GeometryError("shared edges repeat");
        if (se.size() != be_set.size()) throw GeometryError("BE != {e_0..e_M}");
        for (const Edge& e : shared_edges_)
            if (!be_set.count(e)) throw GeometryError("shared edge outside BE");
        for (const Plaquette& p : transversal_)
            if (!distinct.emplace(p.corner.x, p.corner.y).second)
                throw GeometryError("transversal squares repeat");
    }
    // Each transversal square: two BE edges (its shared ones), two others in
    // E(S) or OE; squares neither interior nor transversal avoid V(S) entirely;
    // non-adjacent transversal squares are disjoint.
    for (size_t i = 0; i < transversal_.size(); ++i) {
        const Plaquette& sq = transversal_[i];
        int nbe = 0;
        for (const Edge& e : {sq.bottom(), sq.right(), sq.left(), sq.top()}) {
            if (be_set.count(e)) {
                ++nbe;
                if (e != shared_edges_[i] && e != shared_edges_[i + 1])
                    throw GeometryError("unexpected BE edge on a transversal square");
            } else if (!iv.has_edge(e) && !oe_region_.has_edge(e)) {
                throw GeometryError("transversal square edge in no class");
            }
        }
        if (nbe != 2) throw GeometryError("transversal square must carry exactly two BE edges");
        for (size_t j = i + 2; j < transversal_.size(); ++j)
            if (squares_touch(sq.corner, transversal_[j].corner))
                throw GeometryError("non-adjacent transversal squares touch");
    }
    {
        std::set<std::pair<int, int>> tset;
        for (const Plaquette& p : transversal_) tset.emplace(p.corner.x, p.corner.y);
        for (int b = -lambda_.ymax(); b < lambda_.ymax(); ++b) {
            for (int a = -lambda_.xmax(); a < lambda_.xmax(); ++a) {
                if (in_S({a, b}) || tset.count({a, b})) continue;
                const Vec2 corners[4] = {{a, b}, {a + 1, b}, {a, b + 1}, {a + 1, b + 1}};
                for (Vec2 c : corners)
                    if (iv.has_vertex(c))
                        throw GeometryError("outside square touches V(S)");
            }
        }
    }

    // J: loop vertices that are not boundary vertices of V(S).
    std::unordered_set<Vec2, Vec2Hash> bdry(iv.boundary_vertices().begin(),
                                            iv.boundary_vertices().end());
    if (!bdry.count(v0_)) throw GeometryError("v0 is not a boundary vertex of V(S)");
    std::unordered_set<Vec2, Vec2Hash> seen;
    for (const Step& s : loop_.steps()) {
        Vec2 v = s.to();
        if (!bdry.count(v) && seen.insert(v).second) jset_.push_back(v);
    }
    std::sort(jset_.begin(), jset_.end());

    const auto& dom = pt_domain();
    v0_index_ = size_t(std::lower_bound(dom.begin(), dom.end(), v0_) - dom.begin());
}

const std::vector<Vec2>& ConeTruncation::pt_domain() const {
    return interior_.region().boundary_vertices();
}

size_t ConeTruncation::pt_index(Vec2 v) const {
    const auto& dom = pt_domain();
    auto it = std::lower_bound(dom.begin(), dom.end(), v);
    if (it == dom.end() || *it != v) throw std::invalid_argument("vertex not in PT domain");
    return size_t(it - dom.begin());
}

int ConeTruncation::loop_sign(const Edge& e) const {
    auto it = loop_sign_.find(e);
    if (it == loop_sign_.end()) throw std::invalid_argument("edge not on the loop");
    return it->second;
}

bool well_separated(const StaircasePath& p1, const StaircasePath& p2, int N0, int n0, int m0,
                    int horizon) {
    if (p1.origin() != p2.origin()) return false;
    for (int N = N0; N < N0 + horizon; ++N) {
        try {
            ConeTruncation ct(p1.origin(), p1, p2, N, n0, m0, +1);
        } catch (const GeometryError&) {
            return false;
        } catch (const ConditionSViolation&) {
            return false;
        }
    }
    return true;
}

Configuration complete_interior(const ConeTruncation& ct, const std::vector<uint8_t>& m,
                                const Configuration& k, int g, const GroupTable& G) {
    if (m.size() != ct.oe().size()) throw std::invalid_argument("OE label count mismatch");
    if (!is_admissible(m, ct.oe_region(), G))
        throw AdmissibilityError("OE labels violate an outside plaquette");
    if (!is_admissible(k, ct.interior().region(), G))
        throw AdmissibilityError("interior labels are not admissible");

    const Region& full = ct.lambda().region;
    Configuration out(full.num_edges(), 0);
    std::vector<char> assigned(full.num_edges(), 0);
    for (size_t i = 0; i < ct.oe().size(); ++i) {
        int idx = full.edge_index(ct.oe()[i]);
        out[idx] = m[i];
        assigned[idx] = 1;
    }
    const Region& ir = ct.interior().region();
    for (size_t i = 0; i < ir.num_edges(); ++i) {
        int idx = full.edge_index(ir.edges()[i]);
        out[idx] = k[i];
        assigned[idx] = 1;
    }
    {
        int idx = full.edge_index(ct.e0());
        out[idx] = uint8_t(g);
        assigned[idx] = 1;
    }
    for (const Plaquette& sq : ct.transversal_squares()) {
        auto idx = full.plaquette_edge_indices(sq);
        int missing = -1, count = 0;
        for (int j = 0; j < 4; ++j)
            if (!assigned[idx[j]]) {
                missing = j;
                ++count;
            }
        if (count == 0) continue;  // first square may already be complete via e_0
        if (count != 1) throw std::logic_error("transversal square has several unknowns");
        const int b = out[idx[0]], r = out[idx[1]], l = out[idx[2]], t = out[idx[3]];
        int v;
        switch (missing) {
            case 0: v = G.mul(G.mul(l, t), G.inv(r)); break;
            case 1: v = G.mul(G.inv(b), G.mul(l, t)); break;
            case 2: v = G.mul(b, G.mul(r, G.inv(t))); break;
            default: v = G.mul(G.inv(l), G.mul(b, r)); break;
        }
        out[idx[missing]] = uint8_t(v);
        assigned[idx[missing]] = 1;
    }
    for (char f : assigned)
        if (!f) throw std::logic_error("complete_interior left an edge unassigned");
    if (!is_admissible(out, full, G))
        throw std::logic_error("complete_interior produced an inadmissible configuration");
    return out;
}

}  // namespace qd
