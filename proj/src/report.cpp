#include "ellmod/report.hpp"

#include <map>
#include <random>
#include <sstream>

#include "ellmod/j_profile.hpp"
#include "ellmod/mordell_weil.hpp"
#include "ellmod/pluricanonical_tower.hpp"
#include "ellmod/singularities.hpp"
#include "ellmod/surface_invariants.hpp"

namespace ellmod {

namespace {

Json rational_json(const Rational& q) { return Json{{"num", q.numerator()}, {"den", q.denominator()}}; }

Json matrix_json(const IntMatrix2& m) { return Json::array({Json::array({m.a, m.b}), Json::array({m.c, m.d})}); }

// Multiset as [{width, count}], largest first.
Json multiset_json(const std::vector<Int>& values, const char* key) {
    Json out = Json::array();
    for (std::size_t i = 0; i < values.size();) {
        std::size_t j = i;
        while (j < values.size() && values[j] == values[i]) ++j;
        out.push_back(Json{{key, values[i]}, {"count", static_cast<Int>(j - i)}});
        i = j;
    }
    return out;
}

Json chain_json(const HJChain& chain) {
    return Json{{"coefficients", chain.coefficients},
                {"selfIntersections", chain.self_intersections()},
                {"determinant", chain_determinant(chain.coefficients)}};
}

std::string join(const std::vector<Int>& v) {
    std::string out;
    for (Int x : v) out += (out.empty() ? "" : ",") + std::to_string(x);
    return "[" + out + "]";
}

bool type_i_chains_ok(int c, std::string& details) {
    const Int n = pow3(c);
    for (const auto& fp : schreieder_fixed_points(c)) {
        if (fp.kind != FixedPointKind::TypeI) continue;
        const HJChain ch = hj_expansion(fp.singularity());
        if (static_cast<Int>(ch.size()) != n - 1 || ch.coefficients != std::vector<Int>(ch.size(), 2)) {
            details = fp.label() + " resolves to " + join(ch.self_intersections());
            return false;
        }
    }
    details = "5 chains of " + std::to_string(n - 1) + " (-2)-curves";
    return true;
}

bool type_ii_chains_ok(int c, std::string& details) {
    const Int g = genus_for(c);
    const std::vector<Int> forward{2, g + 1}, backward{g + 1, 2};
    for (const auto& fp : schreieder_fixed_points(c)) {
        if (fp.kind != FixedPointKind::TypeII) continue;
        const HJChain ch = hj_expansion(fp.singularity());
        if (ch.coefficients != forward && ch.coefficients != backward) {
            details = fp.label() + " resolves to " + join(ch.self_intersections());
            return false;
        }
    }
    details = "4 chains [-2, -" + std::to_string(g + 1) + "] (up to orientation)";
    return true;
}

Json invariant_json(const InvariantReport& r) {
    return Json{{"chiTop", r.chi_top},     {"chiHolo", r.chi_holo},   {"p_g", r.p_g},
                {"h11", r.h11},            {"picard", r.picard},      {"mwRank", r.mw_rank},
                {"extremal", r.extremal},  {"sectionSelfIntersection", r.section_self_intersection}};
}

Json profile_json(const RamificationProfile& p) {
    Json over0 = Json::array(), over1728 = Json::array(), inf = Json::array();
    for (const auto& b : p.over0) over0.push_back(Json{{"points", b.points}, {"index", b.index}});
    for (const auto& b : p.over1728) over1728.push_back(Json{{"points", b.points}, {"index", b.index}});
    for (const auto& e : p.over_inf)
        inf.push_back(Json{{"location", e.location}, {"poleOrder", e.order}, {"count", e.count}});
    return Json{{"degree", p.degree},
                {"indeterminate", p.indeterminate},
                {"over0", over0},
                {"over1728", over1728},
                {"overInf", inf},
                {"R0Bound", rational_json(p.r0_bound)},
                {"R1728Bound", rational_json(p.r1728_bound)},
                {"totalRamification", p.total_ramification()}};
}

Json presentation_json(const Presentation& p) {
    // Consecutive generators with the same representative are listed as a run.
    Json runs = Json::array();
    for (std::size_t i = 0; i < p.classes.size();) {
        std::size_t j = i;
        while (j < p.classes.size() && p.classes[j].rep == p.classes[i].rep) ++j;
        std::string names = p.classes[i].name;
        if (j - i > 1) names += ".." + p.classes[j - 1].name;
        runs.push_back(Json{{"generators", names}, {"count", static_cast<Int>(j - i)},
                            {"representative", matrix_json(p.classes[i].rep)},
                            {"trace", p.classes[i].rep.trace()},
                            {"abelianization", abelianization_image(p.classes[i].rep)}});
        i = j;
    }
    const std::string first = p.classes.front().name, last = p.classes.back().name;
    return Json{{"generatorCount", static_cast<Int>(p.classes.size())},
                {"classes", runs},
                {"relation", p.classes.size() <= 6 ? p.relation() : first + " " + p.classes[1].name + " ... " + last + " = Id"}};
}

Json signature_json(const CuspSignature& s) {
    return Json{{"cuspWidths", multiset_json(s.cusp_widths, "width")},
                {"cuspCount", s.cusp_count},
                {"index", s.index},
                {"genus", s.genus},
                {"level", s.level},
                {"indexConvention", "sum of cusp widths (index of the image in PSL(2,Z))"}};
}

void add_congruence_check(Report& rep, const CuspSignature& sig, const CongruenceTable* table) {
    if (table == nullptr) {
        rep.skip("congruence_lookup", "skipped: table unavailable");
        return;
    }
    const auto match = congruence_match(sig, table);
    rep.results["congruence"] = Json{{"table", table->source()},
                                     {"records", static_cast<Int>(table->records().size())},
                                     {"match", match ? Json(match->name) : Json(nullptr)}};
    rep.check("congruence_lookup", !match,
              match ? "signature matches table entry " + match->name
                    : "no entry of " + std::to_string(table->records().size()) + " matches: non-congruence");
}

}  // namespace

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skipped: return "skipped";
    }
    return "?";
}

void Report::check(std::string name, bool ok, std::string details) {
    checks.push_back({std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(details)});
}

void Report::skip(std::string name, std::string details) {
    checks.push_back({std::move(name), CheckStatus::Skipped, std::move(details)});
}

bool Report::all_passed() const {
    for (const auto& c : checks)
        if (c.status != CheckStatus::Pass) return false;
    return true;
}

bool Report::any_skipped() const {
    for (const auto& c : checks)
        if (c.status == CheckStatus::Skipped) return true;
    return false;
}

Json Report::to_json() const {
    Json cs = Json::array();
    for (const auto& c : checks) cs.push_back(Json{{"name", c.name}, {"status", to_string(c.status)}, {"details", c.details}});
    return Json{{"command", command}, {"parameters", parameters}, {"results", results}, {"checks", cs}};
}

Report resolve_report(Int r, Int w1, Int w2) {
    Report rep;
    rep.command = "resolve";
    rep.parameters = Json{{"r", r}, {"w1", w1}, {"w2", w2}};
    if (r > 4096) throw DomainError("resolve reports the full intersection matrix; order must be <= 4096");
    const QuotientSingularity s = normalize_weights(r, w1, w2);
    const HJChain ch = resolve(s);
    rep.results = Json{{"r", s.order()}, {"a", s.weight()}};
    const Json chain = chain_json(ch);
    for (const auto& [k, v] : chain.items()) rep.results[k] = v;
    rep.results["intersectionMatrix"] = ch.intersection_matrix;
    const Int det = chain_determinant(ch.coefficients);
    rep.check("determinant_equals_order", (det < 0 ? -det : det) == s.order(),
              "|det| = " + std::to_string(det < 0 ? -det : det));
    return rep;
}

Report fixed_points_report(int c) {
    Report rep;
    rep.command = "fixed-points";
    rep.parameters = Json{{"c", c}};
    require_c(c);
    if (c > 8) throw DomainError("fixed-points lists every chain curve; c must be <= 8");
    Json pts = Json::array();
    int type_i = 0, type_ii = 0;
    for (const auto& fp : schreieder_fixed_points(c)) {
        const QuotientSingularity s = fp.singularity();
        (fp.kind == FixedPointKind::TypeI ? type_i : type_ii)++;
        pts.push_back(Json{{"point", fp.label()},
                           {"weights", Json::array({fp.weights.first, fp.weights.second})},
                           {"type", to_string(fp.kind)},
                           {"singularity", Json{{"r", s.order()}, {"a", s.weight()}}},
                           {"chain", chain_json(hj_expansion(s))}});
    }
    rep.results = Json{{"order", pow3(c)}, {"g", genus_for(c)}, {"points", pts}};
    rep.check("type_counts", type_i == 5 && type_ii == 4,
              std::to_string(type_i) + " Type I, " + std::to_string(type_ii) + " Type II");
    std::string d;
    bool ok = type_i_chains_ok(c, d);
    rep.check("type_I_chains", ok, d);
    ok = type_ii_chains_ok(c, d);
    rep.check("type_II_chains", ok, d);
    return rep;
}

Report invariants_report(int c) {
    Report rep;
    rep.command = "invariants";
    rep.parameters = Json{{"c", c}};
    const SurfaceConfig cfg = schreieder_config(c);
    const InvariantReport inv = invariant_report(cfg);
    rep.results = invariant_json(inv);
    const Int n = pow3(c), g = genus_for(c);
    rep.check("euler_sum", inv.chi_top == 6 * n + 6 && inv.chi_top == 12 * (g + 1),
              "chi_top = " + std::to_string(inv.chi_top));
    rep.check("p_g_equals_g", inv.p_g == g);
    rep.check("shioda_tate_equals_h11", inv.picard == inv.h11 && inv.h11 == 5 * n + 5,
              "rho = " + std::to_string(inv.picard) + ", h11 = " + std::to_string(inv.h11));
    rep.check("extremal", inv.extremal && inv.mw_rank == 0);
    return rep;
}

Report plurigenus_report(int c, Int m) {
    Report rep;
    rep.command = "plurigenus";
    rep.parameters = Json{{"c", c}, {"m", m}};
    const PlurigenusResult p = plurigenus(c, m);
    const Int g = genus_for(c);
    const Int formula = m * (g - 1) + 1;
    rep.results = Json{{"g", g},
                       {"plurigenus", p.value},
                       {"formula", formula},
                       {"pairsExamined", p.pairs_examined},
                       {"survivingExponents", p.surviving_exponents}};
    rep.check("enumeration_equals_formula", p.value == formula,
              std::to_string(p.value) + " vs m(g-1)+1 = " + std::to_string(formula));
    rep.check("iitaka_base", iitaka_base_check(c, m));
    return rep;
}

Report kodaira_dim_report(int c) {
    Report rep;
    rep.command = "kodaira-dim";
    rep.parameters = Json{{"c", c}, {"mMin", 2}, {"mMax", 12}};
    const KodairaDimensionResult k = kodaira_dimension(c);
    Json pms = Json::array();
    for (const auto& [m, pm] : k.plurigenera) pms.push_back(Json{{"m", m}, {"P_m", pm}});
    rep.results = Json{{"kodairaDimension", k.kappa}, {"P1", k.p1}, {"plurigenera", pms}};
    rep.check("kodaira_dimension_one", k.kappa == 1);
    return rep;
}

Report jprofile_report(int c) {
    Report rep;
    rep.command = "jprofile";
    rep.parameters = Json{{"c", c}};
    const SurfaceConfig cfg = schreieder_config(c);
    const RamificationProfile p = nori_profile(cfg);
    rep.results = profile_json(p);
    rep.results["jNonconstant"] = j_nonconstant(cfg);
    rep.check("degree", p.degree == j_degree(cfg) && p.degree == 6 * pow3(c), "deg(j) = " + std::to_string(p.degree));
    rep.check("sheets", p.sheets_over0() == p.degree && p.sheets_over1728() == p.degree &&
                            p.sheets_over_inf() == p.degree);
    rep.check("riemann_hurwitz_closure", p.riemann_hurwitz_closes(),
              "sum(e-1) = " + std::to_string(p.total_ramification()) + ", 2deg-2 = " +
                  std::to_string(2 * p.degree - 2));
    return rep;
}

Report gamma_report(int c, const CongruenceTable* table) {
    Report rep;
    rep.command = "gamma";
    rep.parameters = Json{{"c", c}};
    const Presentation pres = gamma_presentation(c);
    const CuspSignature sig = cusp_signature(c);
    const Int jdeg = j_degree(schreieder_config(c));
    rep.results = Json{{"presentation", presentation_json(pres)},
                       {"signature", signature_json(sig)},
                       {"abelianizationSum", abelianization_sum(pres)},
                       {"jDegree", jdeg}};
    bool traces = true;
    for (const auto& cls : pres.classes) {
        const Int t = mat_trace(cls.rep);
        traces = traces && (cls.name == "A_inf" ? t == -2 : t == 2);
    }
    rep.check("class_traces", traces, "A_0, A_i parabolic with trace 2; A_inf trace -2");
    rep.check("abelianization", abelianization_check(pres),
              "sum of images = " + std::to_string(abelianization_sum(pres)) + " mod 12");
    rep.check("genus_zero", sig.genus == 0);
    rep.check("index_equals_j_degree", sig.index == jdeg && sig.index == 6 * pow3(c),
              "index " + std::to_string(sig.index) + ", deg(j) " + std::to_string(jdeg));
    rep.check("level", sig.level == 4 * pow3(c), "lcm of widths = " + std::to_string(sig.level));
    add_congruence_check(rep, sig, table);
    return rep;
}

Report mordell_weil_report(int c) {
    Report rep;
    rep.command = "mordell-weil";
    rep.parameters = Json{{"c", c}};
    const SectionCount sc = section_count(c);
    const ComponentGroup group = mw_torsion_group(c);
    const TorsionSearch without = search_torsion_group(schreieder_target(c), IncidenceRule::InjectiveOnly);
    const TorsionSearch with = search_torsion_group(schreieder_target(c), IncidenceRule::DistinctComponents);
    Json incid = Json::array();
    for (const auto& s : section_incidences(c))
        incid.push_back(Json{{"section", s.section_id}, {"componentAtZero", s.component_at_zero},
                             {"componentAtInf", s.component_at_inf}});
    Json bounds = Json::array();
    for (Int l = 0; l <= 2; ++l) bounds.push_back(Json{{"l", l}, {"genus", rational_json(section_genus_bound(c, l))}});
    rep.results = Json{{"sections", sc.count},
                       {"group", group_name(group)},
                       {"selfIntersection", sc.self_intersection},
                       {"genusBounds", bounds},
                       {"incidences", incid}};
    rep.check("section_count", sc.count == 4 && sc.outside_curves_excluded);
    rep.check("self_intersection", sc.self_intersection == -(genus_for(c) + 1));
    rep.check("group_is_Z4", group == ComponentGroup{{4}});
    bool z22_empty = true;
    for (const auto& cand : with.candidates)
        if (cand.candidate == ComponentGroup{{2, 2}} && cand.admitted) z22_empty = false;
    rep.check("z2xz2_search_empty", z22_empty);
    rep.check("injectivity_alone_ambiguous", without.ambiguous(),
              "both order-4 groups inject; the incidence data decides");
    return rep;
}

Report verify_report(const VerifyOptions& opts) {
    const int c = opts.c;
    Report rep;
    rep.command = "verify";
    rep.parameters = Json{{"c", c}, {"plurigenusMMax", opts.plurigenus_m_max}};
    const Int n = pow3(c), g = genus_for(c);
    const SurfaceConfig cfg = schreieder_config(c);

    std::string d;
    bool ok = type_i_chains_ok(c, d);
    rep.check("hj_type_I", ok, d);
    ok = type_ii_chains_ok(c, d);
    rep.check("hj_type_II", ok, d);

    const InvariantReport inv = invariant_report(cfg);
    rep.check("fiber_count", cfg.singular_fiber_count() == n + 2);
    rep.check("euler_sum", euler_total(cfg) == 6 * n + 6 && euler_total(cfg) == 12 * (g + 1),
              "chi_top = " + std::to_string(euler_total(cfg)));
    rep.check("shioda_tate_vs_h11", shioda_tate(cfg, 0) == inv.h11 && inv.h11 == 5 * n + 5,
              "rho = " + std::to_string(shioda_tate(cfg, 0)) + ", h11 = " + std::to_string(inv.h11));
    rep.check("mw_rank_zero", inv.mw_rank == 0 && inv.extremal);
    rep.check("p_g_equals_g", inv.p_g == g);

    bool formula_ok = true, shapes_ok = true;
    std::string formula_detail;
    for (Int m = 2; m <= opts.plurigenus_m_max; ++m) {
        const PlurigenusResult p = plurigenus(c, m);
        formula_ok = formula_ok && p.value == m * (g - 1) + 1;
        for (const auto& s : p.survivors) shapes_ok = shapes_ok && s.shape() == 1;
        formula_detail += (formula_detail.empty() ? "" : " ") + std::to_string(p.value);
    }
    rep.check("plurigenus_formula_vs_enumeration", formula_ok, "P_2..P_" + std::to_string(opts.plurigenus_m_max) + ": " + formula_detail);
    rep.check("shapes_2_3_never_survive", shapes_ok);
    rep.check("kodaira_dimension", kodaira_dimension(c).kappa == 1);
    rep.check("iitaka_base", iitaka_base_check(c, 2) && iitaka_base_check(c, 3));

    std::mt19937_64 rng(0x5eed0000ULL + static_cast<unsigned>(c));
    std::uniform_int_distribution<Int> dist(0, 100);
    bool tower_ok = true;
    for (Int m = 2; m <= 6; ++m) {
        for (int i = 0; i < 1000; ++i) {
            const VanishSeq v{Rational(dist(rng)), Rational(dist(rng))};
            const TowerResult t = tower_pushforward(v, c, m);
            tower_ok = tower_ok && t.trace.levels.back().seq == t.closed_form;
        }
    }
    rep.check("tower_closed_form_vs_stepwise", tower_ok, "1000 random inputs for each m in 2..6");

    const RamificationProfile prof = nori_profile(cfg);
    const Int jdeg = j_degree(cfg);
    rep.check("j_degree", jdeg == 6 * n, std::to_string(jdeg));
    rep.check("forced_ramification", prof.over0.size() == 1 && prof.over0[0].points == 2 * n && prof.over1728.size() == 1 &&
                                  prof.over1728[0].points == 3 * n);
    rep.check("riemann_hurwitz_closure", prof.riemann_hurwitz_closes(),
              std::to_string(prof.total_ramification()) + " = 2*" + std::to_string(jdeg) + "-2");

    const CuspSignature sig = cusp_signature(c);
    const Presentation pres = gamma_presentation(c);
    rep.check("index_equals_j_degree", sig.index == jdeg);
    rep.check("abelianization", abelianization_check(pres));
    rep.check("genus_zero", sig.genus == 0);
    rep.check("level", sig.level == 4 * n, std::to_string(sig.level));
    rep.check("modularity_certificate", modularity_certificate(cfg));
    add_congruence_check(rep, sig, opts.table);

    const SectionCount sc = section_count(c);
    rep.check("section_count", sc.count == 4 && sc.outside_curves_excluded &&
                                   sc.self_intersection == section_self_intersection(cfg) &&
                                   sc.self_intersection == -(g + 1));
    rep.check("mw_group", mw_torsion_group(c) == ComponentGroup{{4}}, "Z/4");

    Int passed = 0;
    for (const auto& ch : rep.checks) passed += ch.status == CheckStatus::Pass;
    rep.results = Json{{"checks", static_cast<Int>(rep.checks.size())}, {"passed", passed}};
    return rep;
}

std::string render_table(const Report& report) {
    std::ostringstream out;
    out << "command: " << report.command << "\n";
    out << "parameters:";
    for (const auto& [k, v] : report.parameters.items()) out << " " << k << "=" << v.dump();
    out << "\nresults:\n";
    std::function<void(const Json&, int)> emit = [&](const Json& j, int depth) {
        const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
        for (const auto& [k, v] : j.items()) {
            if (v.is_object() && !(v.size() == 2 && v.contains("num"))) {
                out << pad << k << ":\n";
                emit(v, depth + 1);
            } else if (v.is_array() && !v.empty() && v.front().is_object()) {
                out << pad << k << ":\n";
                for (const auto& item : v) out << pad << "  - " << item.dump() << "\n";
            } else if (v.is_object()) {
                out << pad << k << ": " << to_string(Rational(v["num"].get<Int>(), v["den"].get<Int>())) << "\n";
            } else {
                out << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    };
    emit(report.results, 1);
    out << "checks:\n";
    for (const auto& c : report.checks) {
        out << "  [" << to_string(c.status) << "] " << c.name;
        if (!c.details.empty()) out << ": " << c.details;
        out << "\n";
    }
    return out.str();
}

}  // namespace ellmod
