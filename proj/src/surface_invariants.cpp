#include "ellmod/surface_invariants.hpp"

namespace ellmod {

Int SurfaceConfig::singular_fiber_count() const {
    Int n = 0;
    for (const auto& p : fibers)
        if (!p.fiber.smooth()) n = checked_add(n, p.count);
    return n;
}

std::vector<std::pair<std::string, KodairaFiber>> SurfaceConfig::expanded() const {
    std::vector<std::pair<std::string, KodairaFiber>> out;
    for (const auto& p : fibers) {
        if (p.count == 1) {
            out.emplace_back(p.location, p.fiber);
            continue;
        }
        const bool indexed = p.location.size() >= 2 && p.location.ends_with("^i");
        for (Int i = 0; i < p.count; ++i) {
            std::string label = p.location;
            if (indexed) label.replace(label.size() - 1, 1, std::to_string(i));
            else label += "#" + std::to_string(i);
            out.emplace_back(std::move(label), p.fiber);
        }
    }
    return out;
}

SurfaceConfig schreieder_config(int c) {
    require_c(c);
    const Int n = pow3(c);
    SurfaceConfig cfg;
    cfg.base_genus = 0;
    cfg.has_section = true;
    cfg.fibers = {
        {"0", KodairaFiber::In(checked_mul(4, n)), 1},
        {"inf", KodairaFiber::InStar(n), 1},
        {"zeta^i", KodairaFiber::In(1), n},
    };
    return cfg;
}

Int euler_total(const SurfaceConfig& cfg) {
    Int total = 0;
    for (const auto& p : cfg.fibers) {
        if (p.count < 0) throw DomainError("negative fiber count");
        total = checked_add(total, checked_mul(euler_number(p.fiber), p.count));
    }
    return total;
}

Int reducible_excess(const SurfaceConfig& cfg) {
    Int total = 0;
    for (const auto& p : cfg.fibers) {
        const Int m = components(p.fiber);
        if (m > 1) total = checked_add(total, checked_mul(m - 1, p.count));
    }
    return total;
}

HodgeNumbers hodge_numbers(const SurfaceConfig& cfg) {
    const Int e = euler_total(cfg);
    if (e % 12 != 0)
        throw InconsistentConfiguration("Euler number " + std::to_string(e) + " is not divisible by 12");
    const Int chi = e / 12;
    const Int q = cfg.base_genus;
    const Int pg = chi - 1 + q;
    if (pg < 0) throw InconsistentConfiguration("negative geometric genus");
    return {chi, pg, 10 * pg - 8 * q + 10};
}

Int shioda_tate(const SurfaceConfig& cfg, Int mw_rank) {
    if (mw_rank < 0) throw DomainError("Mordell-Weil rank must be nonnegative");
    return checked_add(2 + reducible_excess(cfg), mw_rank);
}

MwRank mw_rank_and_extremality(const SurfaceConfig& cfg) {
    if (!cfg.has_section) throw DomainError("configuration has no section");
    const Int rank = hodge_numbers(cfg).h11 - 2 - reducible_excess(cfg);
    if (rank < 0)
        throw InconsistentConfiguration("fiber components exceed h^{1,1}: negative Mordell-Weil rank");
    return {rank, rank == 0};
}

Int section_self_intersection(const SurfaceConfig& cfg) { return -hodge_numbers(cfg).chi_holo; }

InvariantReport invariant_report(const SurfaceConfig& cfg) {
    const HodgeNumbers h = hodge_numbers(cfg);
    const MwRank mw = mw_rank_and_extremality(cfg);
    return {
        euler_total(cfg), h.chi_holo, h.p_g, h.h11, shioda_tate(cfg, mw.rank), mw.rank, mw.extremal, -h.chi_holo,
    };
}

}  // namespace ellmod
