#pragma once

#include <cstdint>
#include <functional>

#include "qd/complete.hpp"
#include "qd/config.hpp"
#include "qd/layer_region.hpp"

namespace qd {

inline constexpr uint64_t kDefaultBudget = uint64_t(1) << 26;

// |G|^n with an overflow guard; throws ResourceError past 2^62.
uint64_t checked_pow(uint64_t base, uint64_t exp);

// All admissible configurations, by filtering every raw assignment.
// Kept deliberately naive: this is the oracle the constructive enumerator is
// checked against. Throws ResourceError if |G|^edges exceeds the budget.
std::vector<Configuration> enumerate_admissible_bruteforce(const Region& region,
                                                           const GroupTable& G,
                                                           uint64_t budget = kDefaultBudget);

uint64_t count_admissible_bruteforce(const Region& region, const GroupTable& G,
                                     uint64_t budget = kDefaultBudget);

// Streams the admissible set of a condition-S region without rejection:
// boundary data ranges over a free spanning set of the holonomy constraint
// (every E4 edge except the first edge of the right boundary path, whose
// label is solved), times free labels on E1, each completed uniquely.
void enumerate_admissible_fast(const LayerRegion& lr, const GroupTable& G,
                               const std::function<void(const Configuration&)>& emit);

std::vector<Configuration> collect_admissible_fast(const LayerRegion& lr, const GroupTable& G);

// |C| for a condition-S region: |G|^(|E4|-1+|E1|), no enumeration.
uint64_t count_admissible_fast(const LayerRegion& lr, const GroupTable& G);

}  // namespace qd
