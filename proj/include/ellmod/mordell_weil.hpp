#pragma once

#include <string>
#include <vector>

#include "ellmod/fiber_catalogue.hpp"

namespace ellmod {

/// Section C_i meeting component S_i of the fiber at 0 and T_i of the fiber at infinity.
struct SectionIncidence {
    std::string section_id;
    Int component_at_zero;
    Int component_at_inf;
};

/// Genus of a curve on C_g x C_g mapping 3^c : 1 onto a rational curve with
/// l fixed points: (2 - 2*3^c + (3^c - 1) l) / 2.
Rational section_genus_bound(int c, Int l);

struct SectionCount {
    Int count;
    Int self_intersection;
    bool outside_curves_excluded;  // genus bound < g for every l
};

SectionCount section_count(int c);

/// A finite abelian group element as coordinates in a product of cyclic factors.
using GroupElement = std::vector<Int>;

/// Product of the component groups of the reducible fibers, one block per fiber.
struct TargetGroup {
    std::vector<ComponentGroup> blocks;

    std::vector<Int> moduli() const;
};

enum class IncidenceRule {
    InjectiveOnly,
    // Images of the four sections have pairwise-distinct coordinates in every block.
    DistinctComponents,
};

struct Witness {
    std::vector<GroupElement> generator_images;
    std::vector<GroupElement> image;  // all group elements, identity first
};

struct CandidateResult {
    ComponentGroup candidate;
    bool admitted = false;
    Int homomorphisms_examined = 0;
    std::vector<Witness> witnesses;  // at most a few retained
};

struct TorsionSearch {
    std::vector<CandidateResult> candidates;
    std::vector<ComponentGroup> admitted() const;
    bool ambiguous() const { return admitted().size() > 1; }
};

/// Tries Z/4 and Z/2 x Z/2 against every homomorphism into `target`.
TorsionSearch search_torsion_group(const TargetGroup& target, IncidenceRule rule);

/// Z/(4*3^c) x Z/4, the component groups of I_{4*3^c} and I_{3^c}*.
TargetGroup schreieder_target(int c);

/// The unique order-4 group admitting an injection with distinct component incidences.
ComponentGroup mw_torsion_group(int c);

/// Incidences of the four sections read off a witness of mw_torsion_group(c);
/// C1 is taken as the zero section.
std::vector<SectionIncidence> section_incidences(int c);

std::string group_name(const ComponentGroup& g);

}  // namespace ellmod
