#include "qd/cone_state.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "qd/enumerate.hpp"
#include "qd/errors.hpp"

namespace qd {

Int cone_admissible_count(const ConeTruncation& ct, const GroupTable& G) {
    const LayerRegion& lr = ct.interior();
    return int_pow(uint64_t(G.order()), lr.e4().size() - 1 + lr.e1().size());
}

Rat cone_state_normalization(const ConeTruncation& ct, const GroupTable& G) {
    return rat_inv(cone_admissible_count(ct, G));
}

Rat cone_state_element(const ConeTruncation& ct, const Configuration& h, const Configuration& k,
                       const GroupTable& G) {
    const Region& reg = ct.interior().region();
    if (h.size() != reg.num_edges() || k.size() != reg.num_edges())
        throw std::invalid_argument("configurations must label E(S)");
    if (!is_admissible(h, reg, G) || !is_admissible(k, reg, G)) return Rat(0);
    if (boundary_potential_of(ct, h, G) != boundary_potential_of(ct, k, G)) return Rat(0);
    return cone_state_normalization(ct, G);
}

PsiFamily build_support_projection(const ConeTruncation& ct, const GroupTable& G) {
    checked_pow(uint64_t(G.order()), ct.interior().region().num_edges());
    PsiFamily fam;
    fam.fiber_size = count_by_boundary_potential(ct, G);

    std::map<BoundaryPotential, size_t> index;
    enumerate_admissible_fast(ct.interior(), G, [&](const Configuration& k) {
        BoundaryPotential t = boundary_potential_of(ct, k, G);
        auto [it, fresh] = index.emplace(std::move(t), fam.fibers.size());
        if (fresh) {
            fam.potentials.push_back(it->first);
            fam.fibers.emplace_back();
        }
        fam.fibers[it->second].push_back(pack_configuration(k, G.order()));
    });
    for (auto& fiber : fam.fibers) {
        std::sort(fiber.begin(), fiber.end());
        if (fiber.size() != fam.fiber_size)
            throw std::logic_error("fiber size differs from |G|^(|J|+|E1|)");
    }
    // Rank must be the number of boundary potentials with t(v0) = e.
    const Int expected_rank =
        int_pow(uint64_t(G.order()), uint64_t(ct.pt_domain().size()) - 1);
    if (Int(long(fam.rank())) != expected_rank)
        throw std::logic_error("support projection rank differs from |PT|");
    return fam;
}

struct ConeStateEngine::Compressed {
    // Sparse entries (t, s) -> <psi_t, X psi_s>.
    std::map<std::pair<uint32_t, uint32_t>, Rat> entries;
};

ConeStateEngine::ConeStateEngine(const ConeTruncation& ct, const GroupTable& G)
    : ct_(ct), G_(G), family_(build_support_projection(ct, G)),
      c_gamma_(cone_state_normalization(ct, G)) {
    for (uint32_t t = 0; t < family_.rank(); ++t)
        for (uint64_t code : family_.fibers[t]) term_index_.push_back({code, t});
    std::sort(term_index_.begin(), term_index_.end());
}

Rat ConeStateEngine::c_n() const {
    return Rat(1, long(family_.rank()));
}

ConeStateEngine::Compressed ConeStateEngine::compress(const LocalOperator& X) const {
    const Region& reg = ct_.interior().region();
    const int n = G_.order();
    const size_t ne = reg.num_edges();

    // Positions of the support edges and the off-support packing weights.
    std::vector<int> sup_pos;
    for (const Edge& e : X.support) {
        int i = reg.edge_index(e);
        if (i < 0) throw std::invalid_argument("operator support outside E(S)");
        sup_pos.push_back(i);
    }

    auto split = [&](uint64_t code) {
        // (support index, off-support key) of a packed configuration.
        Configuration c = unpack_configuration(code, ne, n);
        size_t sidx = 0;
        for (size_t i = sup_pos.size(); i-- > 0;) sidx = sidx * n + c[sup_pos[i]];
        for (int p : sup_pos) c[p] = 0;
        return std::pair<uint64_t, size_t>{pack_configuration(c, n), sidx};
    };

    // off-key -> [(t, support index)] over all family terms.
    std::unordered_map<uint64_t, std::vector<std::pair<uint32_t, uint32_t>>> by_off;
    for (uint32_t t = 0; t < family_.rank(); ++t) {
        for (uint64_t code : family_.fibers[t]) {
            auto [off, sidx] = split(code);
            by_off[off].push_back({t, uint32_t(sidx)});
        }
    }

    Compressed out;
    for (auto& [off, members] : by_off) {
        for (auto [s, col] : members) {
            for (auto [t, row] : members) {
                const Rat& v = X.at(row, col);
                if (v != 0) out.entries[{t, s}] += v;
            }
        }
    }
    return out;
}

Rat ConeStateEngine::expect(const LocalOperator& X) const {
    // phi0(X) = c * sum_t <psi_t, X psi_t>.
    Compressed cx = compress(X);
    Rat sum(0);
    for (auto& [ts, v] : cx.entries)
        if (ts.first == ts.second) sum += v;
    return c_gamma_ * sum;
}

Rat ConeStateEngine::expect_q_sandwich(const LocalOperator& A, const LocalOperator& B) const {
    // phi0(Q A Q B Q) = (c/fiber) sum_{t,s} <psi_t,A psi_s><psi_s,B psi_t>.
    Compressed ca = compress(A);
    Compressed cb = compress(B);
    Rat sum(0);
    for (auto& [ts, va] : ca.entries) {
        auto it = cb.entries.find({ts.second, ts.first});
        if (it != cb.entries.end()) sum += va * it->second;
    }
    return c_gamma_ * sum / Rat(Int(long(family_.fiber_size)));
}

Rat ConeStateEngine::phi_q() const {
    // phi0(Q_N) = c * sum_t <psi_t, psi_t> (Q fixes each psi_t).
    Rat sum(0);
    for (const auto& fiber : family_.fibers) sum += Rat(Int(long(fiber.size())));
    return c_gamma_ * sum;
}

Rat ConeStateEngine::trace_q(const LocalOperator& X) const {
    // Tr(Q X) = sum_t <psi-hat_t, X psi-hat_t>.
    Compressed cx = compress(X);
    Rat sum(0);
    for (auto& [ts, v] : cx.entries)
        if (ts.first == ts.second) sum += v;
    return sum / Rat(Int(long(family_.fiber_size)));
}

TraceCheckResult trace_property_check(const ConeStateEngine& engine, const LocalOperator& A,
                                      const LocalOperator& B) {
    TraceCheckResult r;
    r.lhs = engine.expect_q_sandwich(A, B);
    r.rhs = engine.expect_q_sandwich(B, A);
    r.equal = r.lhs == r.rhs;
    return r;
}

MonotonicityReport support_and_monotonicity_check(const ConeTruncation& ct_small,
                                                  const ConeTruncation& ct_big,
                                                  const GroupTable& G) {
    const Region& small = ct_small.interior().region();
    const Region& big = ct_big.interior().region();
    for (const Edge& e : small.edges())
        if (!big.has_edge(e))
            throw std::invalid_argument("larger truncation does not extend the smaller one");

    MonotonicityReport rep;
    ConeStateEngine small_engine(ct_small, G);
    rep.support_ok = small_engine.phi_q() == 1;

    // Index the small fibers by packed configuration.
    std::unordered_map<uint64_t, uint32_t> small_fiber_of;
    const PsiFamily& sf = small_engine.family();
    for (uint32_t t = 0; t < sf.rank(); ++t)
        for (uint64_t code : sf.fibers[t]) small_fiber_of[code] = t;

    const int n = G.order();
    std::vector<int> inner_pos;  // where the small edges sit in the big region
    for (const Edge& e : small.edges()) inner_pos.push_back(big.edge_index(e));
    std::vector<char> is_inner(big.num_edges(), 0);
    for (int p : inner_pos) is_inner[p] = 1;

    // (Q_N (x) 1) fixes psi-hat_t^{N+1} iff, grouped by the labels outside
    // E(S_N), the inner restrictions form complete small fibers.
    PsiFamily bf = build_support_projection(ct_big, G);
    rep.projection_fixed = true;
    for (const auto& fiber : bf.fibers) {
        ++rep.vectors_checked;
        std::map<uint64_t, std::vector<uint64_t>> groups;  // outer key -> inner codes
        for (uint64_t code : fiber) {
            Configuration c = unpack_configuration(code, big.num_edges(), n);
            uint64_t outer = 0;
            for (size_t i = big.num_edges(); i-- > 0;)
                if (!is_inner[i]) outer = outer * n + c[i];
            uint64_t inner = 0;
            for (size_t i = inner_pos.size(); i-- > 0;) inner = inner * n + c[inner_pos[i]];
            groups[outer].push_back(inner);
        }
        for (auto& [outer, inners] : groups) {
            std::sort(inners.begin(), inners.end());
            auto it = small_fiber_of.find(inners.front());
            if (it == small_fiber_of.end() || sf.fibers[it->second] != inners) {
                rep.projection_fixed = false;
                break;
            }
        }
        if (!rep.projection_fixed) break;
    }
    return rep;
}

}  // namespace qd
