#pragma once

#include <optional>

#include "qd/config.hpp"
#include "qd/enumerate.hpp"
#include "qd/layer_region.hpp"
#include "qd/operators.hpp"
#include "qd/rational.hpp"
#include "qd/region.hpp"

namespace qd {

// |C_{Lambda_N}| as an exact integer, from the constructive parametrization
// of the rectangle as stacked layers.
Int admissible_count_exact(const RectangleRegion& rr, const GroupTable& G);

// The ground-state matrix element phi0(|h><k|) on the rectangle:
// 1/|C| when both are admissible with equal boundary restriction, else 0.
Rat rect_state_element(const Configuration& h, const Configuration& k,
                       const RectangleRegion& rr, const GroupTable& G);

// phi0(B) for a local operator supported inside the rectangle, evaluated by
// the boundary-class sum (1/|C|) sum_a <psi_a| B |psi_a>. Enumerates C, so
// |C| must fit the budget.
Rat rect_state_expect(const LocalOperator& op, const RectangleRegion& rr, const GroupTable& G,
                      uint64_t budget = kDefaultBudget);

// The gauge bijection at an interior vertex: edges leaving v get g * label,
// edges entering v get label * g^-1. v must lie in Lambda_{N-1}.
Configuration apply_gauge(int g, Vec2 v, const Configuration& c, const RectangleRegion& rr,
                          const GroupTable& G);

struct StabilizerEntry {
    Vec2 v;
    int g = 0;          // -1 marks a plaquette entry
    Rat value;
    bool pass = false;
};

struct StabilizerReport {
    std::vector<StabilizerEntry> vertex_terms;     // phi0(A_v^{(g)}) per interior v, g
    std::vector<StabilizerEntry> plaquette_terms;  // phi0(B_p) per plaquette
    bool all_one = false;
    std::string method;  // "enumeration" or "local-blocks"
};

// phi0(A_v^{(g)}) for every interior vertex and group element, and phi0(B_p)
// for every plaquette. Within budget this enumerates C and evaluates the
// definition directly; beyond it, the value is certified through the local
// 2x2-block reduction (every admissible block extends, so a gauge move that
// preserves all blocks preserves C elementwise).
StabilizerReport stabilizer_expectations(const RectangleRegion& rr, const GroupTable& G,
                                         uint64_t budget = kDefaultBudget);

struct ConsistencyReport {
    bool ok = false;
    uint64_t buckets = 0;
    uint64_t pairs_checked = 0;
    uint64_t failures = 0;
};

// Exact check of the compatibility of the rectangle states:
// sum_m phi_{N+1}(|h,m><k,m|) == phi_N(|h><k|) for every pair on Lambda_N.
ConsistencyReport restriction_consistency_check(int N, int n0, int m0, const GroupTable& G,
                                                uint64_t budget = kDefaultBudget);

}  // namespace qd
