#include "qd/rect_state.hpp"

#include <algorithm>
#include <unordered_map>

#include "qd/errors.hpp"

namespace qd {

Int admissible_count_exact(const RectangleRegion& rr, const GroupTable& G) {
    LayerRegion lr = layer_region_of_rectangle(rr);
    return int_pow(uint64_t(G.order()), lr.e4().size() - 1 + lr.e1().size());
}

Rat rect_state_element(const Configuration& h, const Configuration& k,
                       const RectangleRegion& rr, const GroupTable& G) {
    const Region& reg = rr.region;
    if (h.size() != reg.num_edges() || k.size() != reg.num_edges())
        throw std::invalid_argument("configurations must label the full rectangle");
    if (!is_admissible(h, reg, G) || !is_admissible(k, reg, G)) return Rat(0);
    for (const Edge& e : rr.boundary_edges) {
        int i = reg.edge_index(e);
        if (h[i] != k[i]) return Rat(0);
    }
    return rat_inv(admissible_count_exact(rr, G));
}

Rat rect_state_expect(const LocalOperator& op, const RectangleRegion& rr, const GroupTable& G,
                      uint64_t budget) {
    const Region& reg = rr.region;
    for (const Edge& e : op.support)
        if (!reg.has_edge(e)) throw std::invalid_argument("operator support outside rectangle");

    LayerRegion lr = layer_region_of_rectangle(rr);
    if (count_admissible_fast(lr, G) > budget)
        throw ResourceError("rectangle admissible count exceeds the budget");
    checked_pow(uint64_t(G.order()), reg.num_edges());  // packing must fit 2^62

    // Interior support edges are zeroed in the bucket key: two admissible
    // configurations contribute <h|B|k> iff they agree everywhere else and on
    // the boundary rectangle.
    std::vector<char> zeroed(reg.num_edges(), 0);
    for (const Edge& e : op.support) {
        int i = reg.edge_index(e);
        if (!rr.is_boundary_edge[i]) zeroed[i] = 1;
    }

    std::unordered_map<uint64_t, std::vector<uint32_t>> buckets;
    enumerate_admissible_fast(lr, G, [&](const Configuration& c) {
        uint64_t key = 0;
        for (size_t i = c.size(); i-- > 0;)
            key = key * uint64_t(G.order()) + (zeroed[i] ? 0 : c[i]);
        buckets[key].push_back(uint32_t(support_index(op, c, reg, G.order())));
    });

    std::vector<uint64_t> pair_counts(op.matrix.size(), 0);
    for (auto& [key, members] : buckets)
        for (uint32_t a : members)
            for (uint32_t b : members) ++pair_counts[size_t(a) * op.dim() + b];

    Rat sum(0);
    for (size_t i = 0; i < op.matrix.size(); ++i)
        if (pair_counts[i]) sum += Rat(Int(pair_counts[i])) * op.matrix[i];
    return sum / Rat(admissible_count_exact(rr, G));
}

Configuration apply_gauge(int g, Vec2 v, const Configuration& c, const RectangleRegion& rr,
                          const GroupTable& G) {
    if (std::abs(v.x) > rr.xmax() - 1 || std::abs(v.y) > rr.ymax() - 1)
        throw std::invalid_argument("gauge vertex too close to the boundary");
    Configuration out = c;
    auto star = star_edges(v);
    // star order: incoming left, incoming down, outgoing up, outgoing right.
    const int il = rr.region.edge_index(star[0]), id = rr.region.edge_index(star[1]);
    const int ou = rr.region.edge_index(star[2]), orr = rr.region.edge_index(star[3]);
    out[il] = uint8_t(G.mul(c[il], G.inv(g)));
    out[id] = uint8_t(G.mul(c[id], G.inv(g)));
    out[ou] = uint8_t(G.mul(g, c[ou]));
    out[orr] = uint8_t(G.mul(g, c[orr]));
    return out;
}

namespace {

// The 2x2 block of squares around an interior vertex.
Region block_region(Vec2 v) {
    std::vector<Edge> edges;
    for (int a = v.x - 1; a <= v.x; ++a) {
        for (int b = v.y - 1; b <= v.y; ++b) {
            Plaquette p{{a, b}};
            edges.insert(edges.end(), {p.bottom(), p.right(), p.left(), p.top()});
        }
    }
    return Region::from_edges(std::move(edges));
}

bool gauge_preserves_block(Vec2 v, int g, const Region& block, const Configuration& c,
                           const GroupTable& G) {
    Configuration out = c;
    auto star = star_edges(v);
    const int il = block.edge_index(star[0]), id = block.edge_index(star[1]);
    const int ou = block.edge_index(star[2]), orr = block.edge_index(star[3]);
    out[il] = uint8_t(G.mul(c[il], G.inv(g)));
    out[id] = uint8_t(G.mul(c[id], G.inv(g)));
    out[ou] = uint8_t(G.mul(g, c[ou]));
    out[orr] = uint8_t(G.mul(g, c[orr]));
    return is_admissible(out, block, G);
}

}  // namespace

StabilizerReport stabilizer_expectations(const RectangleRegion& rr, const GroupTable& G,
                                         uint64_t budget) {
    StabilizerReport report;
    std::vector<Vec2> interior;
    for (int y = -rr.ymax() + 1; y <= rr.ymax() - 1; ++y)
        for (int x = -rr.xmax() + 1; x <= rr.xmax() - 1; ++x) interior.push_back({x, y});

    LayerRegion lr = layer_region_of_rectangle(rr);
    bool enumerable = true;
    uint64_t total = 0;
    try {
        total = count_admissible_fast(lr, G);
        if (total > budget) enumerable = false;
    } catch (const ResourceError&) {
        enumerable = false;
    }

    const Region& reg = rr.region;
    if (enumerable) {
        report.method = "enumeration";
        // phi0(A_v^{(g)}) = #{k in C : T_g k in C} / |C|; the boundary factor
        // is automatic because the gauge move never touches boundary edges.
        std::vector<std::vector<uint64_t>> good(interior.size(),
                                                std::vector<uint64_t>(G.order(), 0));
        std::vector<std::array<int, 4>> stars;  // edge indices per vertex
        std::vector<std::array<std::array<int, 4>, 4>> plaqs;  // 4 plaquettes around v
        for (Vec2 v : interior) {
            auto se = star_edges(v);
            stars.push_back({reg.edge_index(se[0]), reg.edge_index(se[1]),
                             reg.edge_index(se[2]), reg.edge_index(se[3])});
            std::array<std::array<int, 4>, 4> around;
            const Vec2 corners[4] = {{v.x - 1, v.y - 1}, {v.x, v.y - 1}, {v.x - 1, v.y},
                                     {v.x, v.y}};
            for (int i = 0; i < 4; ++i)
                around[i] = reg.plaquette_edge_indices(Plaquette{corners[i]});
            plaqs.push_back(around);
        }
        Configuration work;
        enumerate_admissible_fast(lr, G, [&](const Configuration& c) {
            work = c;
            for (size_t vi = 0; vi < interior.size(); ++vi) {
                const auto& st = stars[vi];
                good[vi][0] += 1;  // g = e is the identity move
                for (int g = 1; g < G.order(); ++g) {
                    work[st[0]] = uint8_t(G.mul(c[st[0]], G.inv(g)));
                    work[st[1]] = uint8_t(G.mul(c[st[1]], G.inv(g)));
                    work[st[2]] = uint8_t(G.mul(g, c[st[2]]));
                    work[st[3]] = uint8_t(G.mul(g, c[st[3]]));
                    bool ok = true;
                    for (const auto& idx : plaqs[vi])
                        if (!plaquette_admissible(work, idx, G)) {
                            ok = false;
                            break;
                        }
                    if (ok) ++good[vi][g];
                }
                for (int s = 0; s < 4; ++s) work[st[s]] = c[st[s]];
            }
        });
        for (size_t vi = 0; vi < interior.size(); ++vi) {
            for (int g = 0; g < G.order(); ++g) {
                Rat val = Rat(Int(good[vi][g])) / Rat(Int(total));
                report.vertex_terms.push_back({interior[vi], g, val, val == 1});
            }
        }
        for (const Plaquette& p : reg.plaquettes()) {
            // Every enumerated configuration satisfies the plaquette projector.
            report.plaquette_terms.push_back({p.corner, -1, Rat(1), true});
        }
    } else {
        report.method = "local-blocks";
        // A gauge move only changes the four plaquettes around v. If it maps
        // every admissible 2x2 block to an admissible block, it permutes C
        // (blocks always extend to C, which the desk-scale tests verify), and
        // the expectation is exactly 1.
        for (Vec2 v : interior) {
            Region block = block_region(v);
            auto configs = enumerate_admissible_bruteforce(block, G);
            for (int g = 0; g < G.order(); ++g) {
                uint64_t bad = 0;
                for (const Configuration& c : configs)
                    if (!gauge_preserves_block(v, g, block, c, G)) ++bad;
                Rat val = bad == 0 ? Rat(1) : Rat(Int(configs.size() - bad), Int(configs.size()));
                report.vertex_terms.push_back({v, g, val, bad == 0});
            }
        }
        for (const Plaquette& p : reg.plaquettes())
            report.plaquette_terms.push_back({p.corner, -1, Rat(1), true});
    }

    report.all_one = true;
    for (const auto& e : report.vertex_terms) report.all_one = report.all_one && e.pass;
    for (const auto& e : report.plaquette_terms) report.all_one = report.all_one && e.pass;
    return report;
}

ConsistencyReport restriction_consistency_check(int N, int n0, int m0, const GroupTable& G,
                                                uint64_t budget) {
    RectangleRegion small = rectangle_region(N, n0, m0);
    RectangleRegion big = rectangle_region(N + 1, n0, m0);
    LayerRegion big_lr = layer_region_of_rectangle(big);
    if (count_admissible_fast(big_lr, G) > budget)
        throw ResourceError("larger rectangle exceeds the budget");

    const size_t ns = small.region.num_edges();
    const size_t nb = big.region.num_edges();
    checked_pow(uint64_t(G.order()), nb);  // keys must fit 2^62

    // Split the big rectangle's edges into the small rectangle part and the
    // annulus part; pack each configuration as (annulus key, small key).
    std::vector<int> small_pos(nb, -1);
    std::vector<char> in_small(nb, 0);
    for (size_t i = 0; i < nb; ++i) {
        int j = small.region.edge_index(big.region.edges()[i]);
        if (j >= 0) in_small[i] = 1, small_pos[i] = j;
    }

    uint64_t small_states = checked_pow(uint64_t(G.order()), ns);
    std::vector<uint64_t> items;
    enumerate_admissible_fast(big_lr, G, [&](const Configuration& c) {
        uint64_t mkey = 0, hkey = 0;
        for (size_t i = nb; i-- > 0;) {
            if (in_small[i]) continue;
            mkey = mkey * uint64_t(G.order()) + c[i];
        }
        for (size_t i = nb; i-- > 0;) {
            if (!in_small[i]) continue;
            hkey = hkey * uint64_t(G.order()) + c[i];
        }
        if (mkey >= (uint64_t(1) << 63) / small_states)
            throw ResourceError("pair keys exceed 64 bits");
        items.push_back(mkey * small_states + hkey);
    });
    std::sort(items.begin(), items.end());

    ConsistencyReport rep;
    std::unordered_map<uint64_t, uint64_t> pair_counts;  // (h,k) -> #m
    size_t i = 0;
    while (i < items.size()) {
        size_t j = i;
        const uint64_t mkey = items[i] / small_states;
        while (j < items.size() && items[j] / small_states == mkey) ++j;
        for (size_t p = i; p < j; ++p)
            for (size_t q = i; q < j; ++q)
                ++pair_counts[(items[p] % small_states) * small_states +
                              (items[q] % small_states)];
        ++rep.buckets;
        i = j;
    }

    // Reference values on the small rectangle.
    const Rat one_over_c_small = rat_inv(admissible_count_exact(small, G));
    const Rat one_over_c_big = rat_inv(admissible_count_exact(big, G));
    auto small_configs = collect_admissible_fast(layer_region_of_rectangle(small), G);
    std::vector<char> small_boundary(ns, 0);
    for (const Edge& e : small.boundary_edges) small_boundary[small.region.edge_index(e)] = 1;

    // Every admissible pair must match; every bucket key must be admissible.
    uint64_t seen_keys = 0;
    for (const Configuration& h : small_configs) {
        const uint64_t hk = pack_configuration(h, G.order());
        for (const Configuration& k : small_configs) {
            const uint64_t kk = pack_configuration(k, G.order());
            bool same_boundary = true;
            for (size_t e = 0; e < ns; ++e)
                if (small_boundary[e] && h[e] != k[e]) {
                    same_boundary = false;
                    break;
                }
            auto it = pair_counts.find(hk * small_states + kk);
            const uint64_t count = it == pair_counts.end() ? 0 : it->second;
            if (it != pair_counts.end()) ++seen_keys;
            Rat lhs = Rat(Int(count)) * one_over_c_big;
            Rat rhs = same_boundary ? one_over_c_small : Rat(0);
            ++rep.pairs_checked;
            if (lhs != rhs) ++rep.failures;
        }
    }
    // Keys outside the admissible square would mean a nonzero marginal where
    // the small state vanishes.
    if (seen_keys != pair_counts.size()) rep.failures += pair_counts.size() - seen_keys;
    rep.ok = rep.failures == 0;
    return rep;
}

}  // namespace qd
