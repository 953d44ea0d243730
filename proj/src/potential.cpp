#include "qd/potential.hpp"

#include <deque>
#include <random>

#include "qd/errors.hpp"

namespace qd {

namespace {

// Outgoing steps at v inside the region (each edge contributes one step).
std::vector<Step> steps_at(const Region& region, Vec2 v) {
    std::vector<Step> out;
    const Edge cand[4] = {h_edge(v.x, v.y), v_edge(v.x, v.y), h_edge(v.x - 1, v.y),
                          v_edge(v.x, v.y - 1)};
    const int sign[4] = {+1, +1, -1, -1};
    for (int i = 0; i < 4; ++i)
        if (region.has_edge(cand[i])) out.push_back({cand[i], sign[i]});
    return out;
}

}  // namespace

VertexPotential vertex_potential(const Region& region, const Configuration& c,
                                 const GroupTable& G, Vec2 base) {
    if (c.size() != region.num_edges()) throw std::invalid_argument("label count mismatch");
    if (!region.has_vertex(base)) throw std::invalid_argument("base vertex not in region");

    VertexPotential pot;
    pot.base = base;
    pot.values.reserve(region.vertices().size());
    pot.values[base] = GroupTable::identity;

    std::deque<Vec2> queue{base};
    while (!queue.empty()) {
        Vec2 v = queue.front();
        queue.pop_front();
        const int gv = pot.values.at(v);
        for (const Step& s : steps_at(region, v)) {
            const int label = c[region.edge_index(s.edge)];
            const int gw = G.mul(gv, s.sign > 0 ? label : G.inv(label));
            auto [it, fresh] = pot.values.emplace(s.to(), gw);
            if (fresh)
                queue.push_back(s.to());
            else if (it->second != gw)
                throw AdmissibilityError("holonomy inconsistency at edge " + to_string(s.edge));
        }
    }
    if (pot.values.size() != region.vertices().size())
        throw std::invalid_argument("region is not connected from the base vertex");
    return pot;
}

PathOfEdges random_lattice_path(const Region& region, Vec2 from, Vec2 to, uint64_t seed) {
    std::mt19937_64 rng(seed);
    // Random walk from `from` until it hits `to`, then loop-erase.
    std::vector<Vec2> trail{from};
    std::unordered_map<Vec2, size_t, Vec2Hash> pos{{from, 0}};
    Vec2 v = from;
    for (size_t iter = 0; v != to; ++iter) {
        if (iter > 200000) throw std::runtime_error("random walk failed to reach target");
        auto opts = steps_at(region, v);
        const Step& s = opts[std::uniform_int_distribution<size_t>(0, opts.size() - 1)(rng)];
        Vec2 w = s.to();
        auto it = pos.find(w);
        if (it != pos.end()) {
            // Erase the loop.
            for (size_t i = it->second + 1; i < trail.size(); ++i) pos.erase(trail[i]);
            trail.resize(it->second + 1);
        } else {
            pos.emplace(w, trail.size());
            trail.push_back(w);
        }
        v = w;
    }
    PathOfEdges path(from);
    for (size_t i = 0; i + 1 < trail.size(); ++i) {
        Vec2 a = trail[i], b = trail[i + 1];
        if (b.x == a.x + 1) path.push(h_edge(a.x, a.y), +1);
        else if (b.x == a.x - 1) path.push(h_edge(b.x, b.y), -1);
        else if (b.y == a.y + 1) path.push(v_edge(a.x, a.y), +1);
        else path.push(v_edge(b.x, b.y), -1);
    }
    return path;
}

bool path_independence_check(const Region& region, const Configuration& c, const GroupTable& G,
                             int samples, uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto& verts = region.vertices();
    std::uniform_int_distribution<size_t> pick(0, verts.size() - 1);
    for (int i = 0; i < samples; ++i) {
        Vec2 a = verts[pick(rng)];
        Vec2 b = verts[pick(rng)];
        PathOfEdges p = random_lattice_path(region, a, b, rng());
        PathOfEdges q = random_lattice_path(region, a, b, rng());
        if (holonomy(p, c, region, G) != holonomy(q, c, region, G)) return false;
    }
    return true;
}

}  // namespace qd
