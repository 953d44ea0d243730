#include "qd/xi.hpp"

#include <algorithm>

#include "qd/enumerate.hpp"
#include "qd/errors.hpp"
#include "qd/potential.hpp"

namespace qd {

namespace {

std::unordered_map<Edge, size_t, EdgeHash> e4_positions(const ConeTruncation& ct) {
    std::unordered_map<Edge, size_t, EdgeHash> pos;
    const auto& e4 = ct.interior().e4();
    pos.reserve(e4.size() * 2);
    for (size_t i = 0; i < e4.size(); ++i) pos[e4[i]] = i;
    return pos;
}

}  // namespace

bool in_fb(const ConeTruncation& ct, const BoundaryConfiguration& a, const GroupTable& G) {
    const auto& e4 = ct.interior().e4();
    if (a.size() != e4.size()) throw std::invalid_argument("boundary configuration size mismatch");
    auto pos = e4_positions(ct);
    auto label = [&](const Edge& e) { return int(a[pos.at(e)]); };
    return holonomy_with(ct.interior().left_path(), G, label) ==
           holonomy_with(ct.interior().right_path(), G, label);
}

std::unordered_map<Vec2, int, Vec2Hash> loop_potential(const ConeTruncation& ct,
                                                       const BoundaryConfiguration& a,
                                                       const GroupTable& G) {
    if (!in_fb(ct, a, G)) throw AdmissibilityError("configuration is not in FB");
    auto pos = e4_positions(ct);
    std::unordered_map<Vec2, int, Vec2Hash> z;
    z.reserve(ct.loop().size() * 2);
    int acc = GroupTable::identity;
    z[ct.v0()] = acc;
    for (const Step& s : ct.loop().steps()) {
        const int g = a[pos.at(s.edge)];
        acc = G.mul(acc, s.sign > 0 ? g : G.inv(g));
        z[s.to()] = acc;  // the loop is simple; final write restores v0 -> e
    }
    if (acc != GroupTable::identity)
        throw std::logic_error("FB member has nontrivial loop holonomy");
    return z;
}

BoundaryPotential boundary_potential_of(const ConeTruncation& ct, const Configuration& k,
                                        const GroupTable& G) {
    VertexPotential pot = vertex_potential(ct.interior().region(), k, G, ct.v0());
    const auto& dom = ct.pt_domain();
    BoundaryPotential t(dom.size());
    for (size_t i = 0; i < dom.size(); ++i) t[i] = uint8_t(pot.at(dom[i]));
    return t;
}

BoundaryConfiguration xi(const ConeTruncation& ct, const BoundaryPotential& t,
                         const std::vector<uint8_t>& u, const GroupTable& G,
                         size_t pivot_choice) {
    const auto& dom = ct.pt_domain();
    const auto& J = ct.jset();
    if (t.size() != dom.size()) throw std::invalid_argument("potential size mismatch");
    if (t[ct.v0_index()] != GroupTable::identity)
        throw std::invalid_argument("boundary potential must be e at v0");
    if (u.size() != J.size()) throw std::invalid_argument("u must carry |J| values");

    // Vertex values z on the loop: t on the boundary vertices, u on J minus
    // the pivot. The pivot vertex stays unvalued; its two edges are handled
    // separately.
    std::unordered_map<Vec2, int, Vec2Hash> z;
    for (size_t i = 0; i < dom.size(); ++i) z[dom[i]] = t[i];
    std::optional<Vec2> pivot;
    if (!J.empty()) {
        if (pivot_choice >= J.size()) throw std::invalid_argument("pivot choice out of range");
        pivot = J[pivot_choice];
        size_t ui = 0;
        for (size_t i = 0; i < J.size(); ++i) {
            if (i == pivot_choice) continue;
            z[J[i]] = u[ui++];
        }
    }

    const auto& steps = ct.loop().steps();
    const auto& e4 = ct.interior().e4();
    auto pos = e4_positions(ct);
    BoundaryConfiguration a(e4.size(), 0);

    if (!pivot) {
        for (const Step& s : steps) {
            const int zt = z.at(s.from()), zh = z.at(s.to());
            const int val = G.mul(G.inv(zt), zh);  // s_e^{sigma_e} = z_tail^-1 z_head
            a[pos.at(s.edge)] = uint8_t(s.sign > 0 ? val : G.inv(val));
        }
        return a;
    }

    // Locate the two pivot edges in loop order: ... v1 -f1-> vcheck -f2-> v2 ...
    size_t i1 = steps.size();
    for (size_t i = 0; i < steps.size(); ++i)
        if (steps[i].to() == *pivot) i1 = i;
    if (i1 + 1 >= steps.size()) throw std::logic_error("pivot vertex misplaced on the loop");
    const Step& f1 = steps[i1];
    const Step& f2 = steps[i1 + 1];

    // q-check: the loop minus the pivot edges, traversed in loop order from
    // the vertex after the pivot around to the vertex before it.
    int psi_q = GroupTable::identity;
    for (size_t j = 0; j < steps.size(); ++j) {
        if (j == i1 || j == i1 + 1) continue;
        const Step& s = steps[j];
        const int zt = z.at(s.from()), zh = z.at(s.to());
        const int val = G.mul(G.inv(zt), zh);
        a[pos.at(s.edge)] = uint8_t(s.sign > 0 ? val : G.inv(val));
    }
    // Telescoping gives Psi_qcheck = z(to(f2))^-1 z(from(f1)).
    psi_q = G.mul(G.inv(z.at(f2.to())), z.at(f1.from()));

    const int u_last = u.back();
    a[pos.at(f1.edge)] = uint8_t(u_last);
    const int prod = G.mul(psi_q, f1.sign > 0 ? u_last : G.inv(u_last));
    const int f2val = f2.sign > 0 ? G.inv(prod) : prod;  // (psi * u^s1)^(-s2)
    a[pos.at(f2.edge)] = uint8_t(f2val);
    return a;
}

std::pair<BoundaryPotential, std::vector<uint8_t>> xi_inverse(const ConeTruncation& ct,
                                                              const BoundaryConfiguration& a,
                                                              const GroupTable& G,
                                                              size_t pivot_choice) {
    auto z = loop_potential(ct, a, G);
    const auto& dom = ct.pt_domain();
    BoundaryPotential t(dom.size());
    for (size_t i = 0; i < dom.size(); ++i) t[i] = uint8_t(z.at(dom[i]));

    const auto& J = ct.jset();
    std::vector<uint8_t> u;
    if (!J.empty()) {
        if (pivot_choice >= J.size()) throw std::invalid_argument("pivot choice out of range");
        for (size_t i = 0; i < J.size(); ++i) {
            if (i == pivot_choice) continue;
            u.push_back(uint8_t(z.at(J[i])));
        }
        const Vec2 pivot = J[pivot_choice];
        const auto& steps = ct.loop().steps();
        size_t i1 = steps.size();
        for (size_t i = 0; i < steps.size(); ++i)
            if (steps[i].to() == pivot) i1 = i;
        auto pos = e4_positions(ct);
        u.push_back(a[pos.at(steps[i1].edge)]);
    }
    return {std::move(t), std::move(u)};
}

uint64_t count_by_boundary_potential(const ConeTruncation& ct, const GroupTable& G) {
    return checked_pow(uint64_t(G.order()), ct.jset().size() + ct.interior().e1().size());
}

uint64_t count_by_boundary_potential_verified(const ConeTruncation& ct,
                                              const BoundaryPotential& t, const GroupTable& G) {
    uint64_t count = 0;
    enumerate_admissible_fast(ct.interior(), G, [&](const Configuration& k) {
        if (boundary_potential_of(ct, k, G) == t) ++count;
    });
    return count;
}

}  // namespace qd
