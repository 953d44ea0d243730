#pragma once

#include <optional>
#include <unordered_map>

#include "qd/config.hpp"
#include "qd/layer_region.hpp"
#include "qd/staircase.hpp"

namespace qd {

// The truncation of the cone between two staircase paths to the rectangle
// Lambda_N^{(n0,m0)}: the enclosed squares (a layer region), the edges that
// cross its vertex set (BE), the remaining outside edges (OE), the chain of
// transversal squares along the two paths, and the loop data used by the
// boundary-potential bijection.
class ConeTruncation {
  public:
    ConeTruncation(Vec2 v0, StaircasePath p1, StaircasePath p2, int N, int n0, int m0,
                   int sigma = +1);

    Vec2 v0() const { return v0_; }
    int N() const { return N_; }
    int sigma() const { return sigma_; }
    const StaircasePath& p1() const { return p1_; }
    const StaircasePath& p2() const { return p2_; }
    const RectangleRegion& lambda() const { return lambda_; }
    const LayerRegion& interior() const { return interior_; }

    // The closed loop p1^{(N)} l^{(N)} (p2^{(N)})^{-1}, based at v0.
    const PathOfEdges& loop() const { return loop_; }

    const std::vector<Plaquette>& transversal_squares() const { return transversal_; }
    const std::vector<Edge>& shared_edges() const { return shared_edges_; }  // e_0 .. e_M
    const Edge& e0() const { return shared_edges_.front(); }
    int M() const { return int(shared_edges_.size()) - 1; }

    const std::vector<Edge>& be() const { return be_; }
    const std::vector<Edge>& oe() const { return oe_; }
    const Region& oe_region() const { return oe_region_; }

    // Loop vertices that are not boundary vertices of V(S).
    const std::vector<Vec2>& jset() const { return jset_; }

    // Sorted boundary vertices of V(S); the domain of boundary potentials.
    const std::vector<Vec2>& pt_domain() const;
    size_t pt_index(Vec2 v) const;  // position of v in pt_domain()
    size_t v0_index() const { return v0_index_; }

    // Direction with which the loop traverses a loop edge.
    int loop_sign(const Edge& e) const;

  private:
    Vec2 v0_;
    StaircasePath p1_, p2_;
    int N_, n0_, m0_, sigma_;
    RectangleRegion lambda_;
    LayerRegion interior_;
    PathOfEdges loop_;
    std::vector<Plaquette> transversal_;
    std::vector<Edge> shared_edges_;
    std::vector<Edge> be_, oe_;
    Region oe_region_;
    std::vector<Vec2> jset_;
    size_t v0_index_ = 0;
    std::unordered_map<Edge, int, EdgeHash> loop_sign_;
};

// True iff the loop construction succeeds (simple loop, condition-S interior,
// valid transversal chain) for every N in [N0, N0+horizon). The universally
// quantified definition is not decidable by finite computation; the horizon
// is the caller's check window and is recorded in reports.
bool well_separated(const StaircasePath& p1, const StaircasePath& p2, int N0, int n0, int m0,
                    int horizon = 4);

struct ConeFromAngles {
    Vec2 v0;
    StaircasePath p1, p2;
    int n0 = 1, m0 = 1, N0 = 1;
    std::optional<int> M0;  // absent lower cut for the wide-angle case
};

// Discretizes the convex cone with the given boundary angles and apex in
// [0,1]^2 into its two boundary staircases. Angles: 0 <= theta1 < pi/2,
// 0 < theta2 - theta1 < pi. The returned staircases are materialized far
// enough to be exact for truncations up to max_N.
ConeFromAngles cone_from_angles(double theta1, double theta2, double apex_x, double apex_y,
                                int max_N = 8);

// Labels for OE (order of ct.oe()) and the single edge e_0.
// The unique admissible configuration on the full rectangle restricting to
// (m, k, g): the shared edges e_1..e_M are filled in transversal order by
// single-unknown plaquette solves.
Configuration complete_interior(const ConeTruncation& ct, const std::vector<uint8_t>& m,
                                const Configuration& k, int g, const GroupTable& G);

}  // namespace qd
