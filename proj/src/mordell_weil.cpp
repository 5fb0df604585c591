#include "ellmod/mordell_weil.hpp"

#include <algorithm>
#include <set>

#include "ellmod/singularities.hpp"
#include "ellmod/surface_invariants.hpp"

namespace ellmod {

namespace {

constexpr std::size_t kKeptWitnesses = 4;

std::vector<GroupElement> all_elements(const std::vector<Int>& moduli) {
    std::vector<GroupElement> out{GroupElement(moduli.size(), 0)};
    for (std::size_t k = 0; k < moduli.size(); ++k) {
        std::vector<GroupElement> next;
        next.reserve(out.size() * static_cast<std::size_t>(moduli[k]));
        for (const auto& e : out) {
            for (Int v = 0; v < moduli[k]; ++v) {
                GroupElement x = e;
                x[k] = v;
                next.push_back(std::move(x));
            }
        }
        out = std::move(next);
    }
    return out;
}

GroupElement scaled_sum(const std::vector<GroupElement>& gens, const std::vector<Int>& coeffs,
                        const std::vector<Int>& moduli) {
    GroupElement out(moduli.size(), 0);
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t k = 0; k < moduli.size(); ++k) out[k] = mod(out[k] + coeffs[i] * gens[i][k], moduli[k]);
    return out;
}

bool killed_by(const GroupElement& x, Int n, const std::vector<Int>& moduli) {
    for (std::size_t k = 0; k < moduli.size(); ++k)
        if (mod(n * x[k], moduli[k]) != 0) return false;
    return true;
}

// Projection of an element onto each fiber's block of coordinates.
std::vector<GroupElement> block_projections(const GroupElement& x, const TargetGroup& target) {
    std::vector<GroupElement> out;
    std::size_t offset = 0;
    for (const auto& block : target.blocks) {
        const std::size_t len = block.invariant_factors.size();
        out.emplace_back(x.begin() + static_cast<std::ptrdiff_t>(offset),
                         x.begin() + static_cast<std::ptrdiff_t>(offset + len));
        offset += len;
    }
    return out;
}

bool distinct_in_every_block(const std::vector<GroupElement>& image, const TargetGroup& target) {
    for (std::size_t b = 0; b < target.blocks.size(); ++b) {
        std::set<GroupElement> seen;
        for (const auto& x : image)
            if (!seen.insert(block_projections(x, target)[b]).second) return false;
    }
    return true;
}

CandidateResult try_candidate(const ComponentGroup& cand, const TargetGroup& target, IncidenceRule rule) {
    const std::vector<Int> moduli = target.moduli();
    const std::vector<GroupElement> elements = all_elements(moduli);
    const std::vector<Int>& orders = cand.invariant_factors;
    const std::vector<GroupElement> source = all_elements(orders);

    // A homomorphism from a product of Z/n_i is a choice of generator images with n_i x_i = 0.
    std::vector<std::vector<GroupElement>> choices;
    for (Int n : orders) {
        std::vector<GroupElement> ok;
        for (const auto& x : elements)
            if (killed_by(x, n, moduli)) ok.push_back(x);
        choices.push_back(std::move(ok));
    }

    CandidateResult res{cand, false, 0, {}};
    std::vector<std::size_t> pick(orders.size(), 0);
    while (true) {
        std::vector<GroupElement> gens;
        for (std::size_t i = 0; i < orders.size(); ++i) gens.push_back(choices[i][pick[i]]);
        ++res.homomorphisms_examined;

        std::vector<GroupElement> image;
        for (const auto& e : source) image.push_back(scaled_sum(gens, e, moduli));
        const bool injective = std::set<GroupElement>(image.begin(), image.end()).size() == image.size();
        if (injective && (rule == IncidenceRule::InjectiveOnly || distinct_in_every_block(image, target))) {
            res.admitted = true;
            if (res.witnesses.size() < kKeptWitnesses) res.witnesses.push_back({gens, image});
        }

        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
        if (i == pick.size()) break;
    }
    return res;
}

}  // namespace

Rational section_genus_bound(int c, Int l) {
    require_c(c);
    if (l < 0 || l > 2) throw DomainError("l must be in [0, 2]");
    const Int n = pow3(c);
    return Rational(2 - 2 * n + (n - 1) * l, 2);
}

SectionCount section_count(int c) {
    require_c(c);
    const Int g = genus_for(c);
    SectionCount out{0, section_self_intersection(schreieder_config(c)), true};
    // A section not among the exceptional curves would lift to a curve of genus
    // at most 1 mapping to C_g, which has genus g >= 4.
    for (Int l = 0; l <= 2; ++l) {
        const Rational bound = section_genus_bound(c, l);
        if (bound > 1 || bound >= g) out.outside_curves_excluded = false;
    }
    for (const FixedPoint& fp : schreieder_fixed_points(c)) {
        for (Int self : resolve(fp.singularity()).self_intersections())
            if (self == out.self_intersection) ++out.count;
    }
    return out;
}

std::vector<Int> TargetGroup::moduli() const {
    std::vector<Int> out;
    for (const auto& b : blocks) out.insert(out.end(), b.invariant_factors.begin(), b.invariant_factors.end());
    return out;
}

std::vector<ComponentGroup> TorsionSearch::admitted() const {
    std::vector<ComponentGroup> out;
    for (const auto& c : candidates)
        if (c.admitted) out.push_back(c.candidate);
    return out;
}

TorsionSearch search_torsion_group(const TargetGroup& target, IncidenceRule rule) {
    TorsionSearch out;
    for (const ComponentGroup& cand : {ComponentGroup{{4}}, ComponentGroup{{2, 2}}})
        out.candidates.push_back(try_candidate(cand, target, rule));
    return out;
}

TargetGroup schreieder_target(int c) {
    require_c(c);
    if (c > 8) throw DomainError("brute-force search is limited to c <= 8");
    const Int n = pow3(c);
    return {{component_group(KodairaFiber::In(4 * n)), component_group(KodairaFiber::InStar(n))}};
}

ComponentGroup mw_torsion_group(int c) {
    const TorsionSearch search = search_torsion_group(schreieder_target(c), IncidenceRule::DistinctComponents);
    const auto admitted = search.admitted();
    if (admitted.empty()) throw InconsistentConfiguration("no order-4 group injects with distinct incidences");
    if (admitted.size() > 1) throw InconsistentConfiguration("Mordell-Weil group is not determined");
    return admitted.front();
}

std::vector<SectionIncidence> section_incidences(int c) {
    const TorsionSearch search = search_torsion_group(schreieder_target(c), IncidenceRule::DistinctComponents);
    for (const auto& cand : search.candidates) {
        if (!cand.admitted) continue;
        std::vector<SectionIncidence> out;
        const auto& image = cand.witnesses.front().image;
        for (std::size_t i = 0; i < image.size(); ++i)
            out.push_back({"C" + std::to_string(i + 1), image[i][0], image[i][1]});
        return out;
    }
    throw InconsistentConfiguration("no order-4 group injects with distinct incidences");
}

std::string group_name(const ComponentGroup& g) {
    if (g.invariant_factors.empty()) return "0";
    std::string out;
    for (Int n : g.invariant_factors) {
        if (!out.empty()) out += " x ";
        out += "Z/" + std::to_string(n);
    }
    return out;
}

}  // namespace ellmod
