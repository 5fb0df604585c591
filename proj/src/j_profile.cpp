#include "ellmod/j_profile.hpp"

#include <algorithm>

namespace ellmod {

namespace {

bool has_kind(const SurfaceConfig& cfg, FiberKind kind) {
    return std::any_of(cfg.fibers.begin(), cfg.fibers.end(),
                       [kind](const PlacedFiber& p) { return p.count > 0 && p.fiber.kind == kind; });
}

// Every singular fiber is I_b or I_b* with b > 0.
bool only_multiplicative_poles(const SurfaceConfig& cfg) {
    return std::all_of(cfg.fibers.begin(), cfg.fibers.end(), [](const PlacedFiber& p) {
        return p.fiber.smooth() || (p.fiber.has_parameter() && p.fiber.b > 0);
    });
}

Int pole_sum(const SurfaceConfig& cfg) {
    Int deg = 0;
    for (const auto& p : cfg.fibers)
        if (p.fiber.has_parameter()) deg = checked_add(deg, checked_mul(p.fiber.b, p.count));
    return deg;
}

}  // namespace

Int RamificationProfile::sheets_over0() const {
    Int n = 0;
    for (const auto& b : over0) n += b.points * b.index;
    return n;
}

Int RamificationProfile::sheets_over1728() const {
    Int n = 0;
    for (const auto& b : over1728) n += b.points * b.index;
    return n;
}

Int RamificationProfile::sheets_over_inf() const {
    Int n = 0;
    for (const auto& p : over_inf) n += p.order * p.count;
    return n;
}

Int RamificationProfile::total_ramification() const {
    Int total = 0;
    for (const auto& b : over0) total += b.points * (b.index - 1);
    for (const auto& b : over1728) total += b.points * (b.index - 1);
    for (const auto& p : over_inf) total += (p.order - 1) * p.count;
    return total;
}

Int j_degree(const SurfaceConfig& cfg) {
    if (!j_nonconstant(cfg)) throw Unsupported("j-invariant is constant");
    // Only a configuration whose invariants are defined can be shown non-extremal.
    if (euler_total(cfg) % 12 == 0 && cfg.has_section) {
        const MwRank mw = mw_rank_and_extremality(cfg);
        if (!mw.extremal) throw Unsupported("configuration is not extremal");
    }
    return pole_sum(cfg);
}

RamificationProfile nori_profile(const SurfaceConfig& cfg) {
    if (has_kind(cfg, FiberKind::IIIStar)) throw Unsupported("III* fibers present");
    if (!j_nonconstant(cfg)) throw Unsupported("j-invariant is constant");
    if (!mw_rank_and_extremality(cfg).extremal) throw Unsupported("configuration is not extremal");

    RamificationProfile prof;
    prof.degree = pole_sum(cfg);
    if (prof.degree % 6 != 0)
        throw InconsistentConfiguration("deg(j) = " + std::to_string(prof.degree) +
                                        " is not divisible by 6; the ramification bounds cannot be equalities");
    prof.r0_bound = Rational(2 * prof.degree, 3);
    prof.r1728_bound = Rational(prof.degree, 2);
    for (const auto& p : cfg.fibers)
        if (p.fiber.has_parameter() && p.fiber.b > 0) prof.over_inf.push_back({p.location, p.fiber.b, p.count});

    if (!only_multiplicative_poles(cfg)) {
        prof.indeterminate = true;
        return prof;
    }
    // R_0 + R_1728 = 7 deg / 6 together with R_0 >= 2 deg / 3 and R_1728 >= deg / 2
    // forces both bounds to be equalities: all of j^-1(0) has index 3 and all of
    // j^-1(1728) has index 2.
    prof.over0.push_back({prof.degree / 3, 3});
    prof.over1728.push_back({prof.degree / 2, 2});
    return prof;
}

bool j_nonconstant(const SurfaceConfig& cfg) {
    return std::any_of(cfg.fibers.begin(), cfg.fibers.end(),
                       [](const PlacedFiber& p) { return p.count > 0 && j_value(p.fiber) == JValue::Infinity; });
}

bool modularity_certificate(const SurfaceConfig& cfg) {
    if (!cfg.has_section) return false;
    if (has_kind(cfg, FiberKind::IIStar) || has_kind(cfg, FiberKind::IIIStar)) return false;
    if (!j_nonconstant(cfg)) return false;
    try {
        return mw_rank_and_extremality(cfg).extremal;
    } catch (const InconsistentConfiguration&) {
        return false;
    }
}

}  // namespace ellmod
