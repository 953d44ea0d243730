#pragma once

#include "qd/cone.hpp"
#include "qd/operators.hpp"
#include "qd/rational.hpp"
#include "qd/xi.hpp"

namespace qd {

// The restriction of the ground state to a cone truncation:
// phi0(|h><k|) = c * [h,k admissible] * [equal boundary potentials],
// with the normalization c = 1/|C_{E(S)}| forced by unit trace.
Rat cone_state_element(const ConeTruncation& ct, const Configuration& h, const Configuration& k,
                       const GroupTable& G);

Int cone_admissible_count(const ConeTruncation& ct, const GroupTable& G);  // |C_{E(S)}|
Rat cone_state_normalization(const ConeTruncation& ct, const GroupTable& G);  // c_{Gamma,N}

// The family of (unnormalized) vectors psi_t = sum over the fiber of t, one
// per boundary potential. Their normalized span projector is the support
// projection Q_N; fibers all have size |G|^(|J|+|E1|) and are disjoint.
struct PsiFamily {
    std::vector<BoundaryPotential> potentials;       // t values, pt_domain order
    std::vector<std::vector<uint64_t>> fibers;       // sorted packed configs per t
    uint64_t fiber_size = 0;
    size_t rank() const { return fibers.size(); }
};

PsiFamily build_support_projection(const ConeTruncation& ct, const GroupTable& G);

// Exact expectation functional phi0 on operators supported in E(S), and the
// compressions <psi_t, X psi_s> used by the trace checks.
class ConeStateEngine {
  public:
    ConeStateEngine(const ConeTruncation& ct, const GroupTable& G);

    const PsiFamily& family() const { return family_; }
    const Rat& c_gamma() const { return c_gamma_; }
    Rat c_n() const;  // 1/rank(Q_N)

    Rat expect(const LocalOperator& X) const;             // phi0(X)
    Rat expect_q_sandwich(const LocalOperator& A, const LocalOperator& B) const;
                                                          // phi0(Q A Q B Q)
    Rat phi_q() const;                                    // phi0(Q_N)
    Rat trace_q(const LocalOperator& X) const;            // Tr(Q_N X)

  private:
    struct Compressed;  // sparse <psi_t, X psi_s>
    Compressed compress(const LocalOperator& X) const;

    const ConeTruncation& ct_;
    const GroupTable& G_;
    PsiFamily family_;
    Rat c_gamma_;
    std::vector<std::pair<uint64_t, uint32_t>> term_index_;  // packed config -> t
};

struct TraceCheckResult {
    Rat lhs, rhs;
    bool equal = false;
};

// phi0(Q A Q B Q) == phi0(Q B Q A Q), both sides computed exactly.
TraceCheckResult trace_property_check(const ConeStateEngine& engine, const LocalOperator& A,
                                      const LocalOperator& B);

struct MonotonicityReport {
    bool support_ok = false;       // phi0(Q_N) == 1
    bool projection_fixed = false; // (Q_N (x) 1) psi-hat_t^{N+1} == psi-hat_t^{N+1} for all t
    size_t vectors_checked = 0;
};

// ct_big must extend ct_small (same cone data, larger N).
MonotonicityReport support_and_monotonicity_check(const ConeTruncation& ct_small,
                                                  const ConeTruncation& ct_big,
                                                  const GroupTable& G);

}  // namespace qd
