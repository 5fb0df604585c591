#pragma once

#include <string>
#include <vector>

#include "ellmod/surface_invariants.hpp"

namespace ellmod {

/// `points` points of ramification index `index` each.
struct RamificationBlock {
    Int points;
    Int index;
};

struct PoleEntry {
    std::string location;
    Int order;
    Int count = 1;
};

struct RamificationProfile {
    Int degree = 0;
    std::vector<RamificationBlock> over0;
    std::vector<RamificationBlock> over1728;
    std::vector<PoleEntry> over_inf;
    // Set when the fiber types do not force equality in the ramification
    // bounds; over0/over1728 are then empty and only the bounds are known.
    bool indeterminate = false;
    Rational r0_bound;     // 2 deg / 3
    Rational r1728_bound;  // deg / 2

    Int sheets_over0() const;
    Int sheets_over1728() const;
    Int sheets_over_inf() const;
    /// Sum of (e - 1) over every point of the three fibers.
    Int total_ramification() const;
    bool riemann_hurwitz_closes() const { return !indeterminate && total_ramification() == 2 * degree - 2; }
};

/// Sum of b over the I_b and I_b* fibers. Throws Unsupported for a configuration
/// that is provably not extremal.
Int j_degree(const SurfaceConfig& cfg);

RamificationProfile nori_profile(const SurfaceConfig& cfg);

bool j_nonconstant(const SurfaceConfig& cfg);

/// Extremal, with a section, non-constant j, and no II* or III* fibers.
bool modularity_certificate(const SurfaceConfig& cfg);

}  // namespace ellmod
