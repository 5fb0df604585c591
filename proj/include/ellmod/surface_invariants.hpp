#pragma once

#include <string>
#include <vector>

#include "ellmod/fiber_catalogue.hpp"

namespace ellmod {

/// One or more fibers of the same type. A group with count n > 1 stands for the
/// locations label with the index i running over 0..n-1 (e.g. "zeta^i").
struct PlacedFiber {
    std::string location;
    KodairaFiber fiber;
    Int count = 1;
};

struct SurfaceConfig {
    Int base_genus = 0;
    std::vector<PlacedFiber> fibers;
    bool has_section = true;

    Int singular_fiber_count() const;
    /// One entry per fiber; groups are spelled out with their index substituted.
    std::vector<std::pair<std::string, KodairaFiber>> expanded() const;
};

struct HodgeNumbers {
    Int chi_holo;
    Int p_g;
    Int h11;
};

struct MwRank {
    Int rank;
    bool extremal;
};

struct InvariantReport {
    Int chi_top;
    Int chi_holo;
    Int p_g;
    Int h11;
    Int picard;
    Int mw_rank;
    bool extremal;
    Int section_self_intersection;
};

/// I_{4*3^c} at "0", I_{3^c}* at "inf", and 3^c fibers I_1 at "zeta^i".
SurfaceConfig schreieder_config(int c);

Int euler_total(const SurfaceConfig& cfg);

/// Sum over reducible fibers of (components - 1).
Int reducible_excess(const SurfaceConfig& cfg);

HodgeNumbers hodge_numbers(const SurfaceConfig& cfg);

Int shioda_tate(const SurfaceConfig& cfg, Int mw_rank);

/// Rank read off Shioda-Tate under maximal Picard number (rho = h11).
MwRank mw_rank_and_extremality(const SurfaceConfig& cfg);

Int section_self_intersection(const SurfaceConfig& cfg);

InvariantReport invariant_report(const SurfaceConfig& cfg);

}  // namespace ellmod
