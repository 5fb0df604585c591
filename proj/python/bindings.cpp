#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ellmod/cli.hpp"
#include "ellmod/errors.hpp"
#include "ellmod/j_profile.hpp"
#include "ellmod/modular_monodromy.hpp"
#include "ellmod/mordell_weil.hpp"
#include "ellmod/pluricanonical_tower.hpp"
#include "ellmod/report.hpp"
#include "ellmod/singularities.hpp"
#include "ellmod/surface_invariants.hpp"

namespace py = pybind11;
using namespace ellmod;

namespace {

std::pair<Int, Int> rational_pair(const Rational& q) { return {q.numerator(), q.denominator()}; }

py::dict invariants_dict(int c) {
    const InvariantReport r = invariant_report(schreieder_config(c));
    py::dict d;
    d["chiTop"] = r.chi_top;
    d["chiHolo"] = r.chi_holo;
    d["p_g"] = r.p_g;
    d["h11"] = r.h11;
    d["picard"] = r.picard;
    d["mwRank"] = r.mw_rank;
    d["extremal"] = r.extremal;
    d["sectionSelfIntersection"] = r.section_self_intersection;
    return d;
}

py::dict profile_dict(int c) {
    const RamificationProfile p = nori_profile(schreieder_config(c));
    py::list over0, over1728, inf;
    for (const auto& b : p.over0) over0.append(py::make_tuple(b.points, b.index));
    for (const auto& b : p.over1728) over1728.append(py::make_tuple(b.points, b.index));
    for (const auto& e : p.over_inf) inf.append(py::make_tuple(e.location, e.order, e.count));
    py::dict d;
    d["degree"] = p.degree;
    d["over0"] = over0;
    d["over1728"] = over1728;
    d["overInf"] = inf;
    d["totalRamification"] = p.total_ramification();
    d["riemannHurwitzCloses"] = p.riemann_hurwitz_closes();
    return d;
}

py::dict signature_dict(int c) {
    const CuspSignature s = cusp_signature(c);
    py::dict d;
    d["cuspWidths"] = s.cusp_widths;
    d["cuspCount"] = s.cusp_count;
    d["index"] = s.index;
    d["genus"] = s.genus;
    d["level"] = s.level;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact invariants of the elliptic surfaces X_c";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<InconsistentConfiguration>(m, "InconsistentConfiguration", PyExc_RuntimeError);
    py::register_exception<Unsupported>(m, "Unsupported", PyExc_RuntimeError);
    py::register_exception<TableUnavailable>(m, "TableUnavailable", PyExc_RuntimeError);
    py::register_exception<TableFormatError>(m, "TableFormatError", PyExc_ValueError);

    m.def("normalize_weights", [](Int r, Int w1, Int w2) {
        const auto s = normalize_weights(r, w1, w2);
        return std::make_pair(s.order(), s.weight());
    });
    m.def("hj_expansion", [](Int r, Int a) { return hj_expansion({r, a}).coefficients; });
    m.def("resolve", [](Int r, Int a) {
        const HJChain ch = resolve({r, a});
        return std::make_pair(ch.self_intersections(), ch.intersection_matrix);
    });
    m.def("chain_determinant", &chain_determinant);
    m.def("fixed_points", [](int c) {
        py::list out;
        for (const auto& fp : schreieder_fixed_points(c)) {
            const auto s = fp.singularity();
            out.append(py::make_tuple(fp.label(), fp.weights, to_string(fp.kind), std::make_pair(s.order(), s.weight())));
        }
        return out;
    });
    m.def("invariants", &invariants_dict, py::arg("c"));
    m.def("plurigenus", [](int c, Int mm) {
        const auto p = plurigenus(c, mm);
        return std::make_pair(p.value, p.surviving_exponents);
    }, py::arg("c"), py::arg("m"));
    m.def("kodaira_dimension", [](int c) { return kodaira_dimension(c).kappa; }, py::arg("c"));
    m.def("tower_pushforward", [](Int a1, Int a2, int c, Int mm) {
        const auto t = tower_pushforward({a1, a2}, c, mm);
        return std::make_pair(rational_pair(t.closed_form.first), rational_pair(t.closed_form.second));
    });
    m.def("j_degree", [](int c) { return j_degree(schreieder_config(c)); }, py::arg("c"));
    m.def("jprofile", &profile_dict, py::arg("c"));
    m.def("cusp_signature", &signature_dict, py::arg("c"));
    m.def("abelianization_image", [](Int a, Int b, Int cc, Int d) { return abelianization_image({a, b, cc, d}); });
    m.def("abelianization_check", [](int c) { return abelianization_check(gamma_presentation(c)); }, py::arg("c"));
    m.def("congruence_lookup", [](const std::vector<Int>& widths, const std::string& table_path) {
        const auto table = CongruenceTable::load(table_path);
        return congruence_lookup(signature_from_widths(widths), &table);
    });
    m.def("section_count", [](int c) {
        const auto s = section_count(c);
        return std::make_pair(s.count, s.self_intersection);
    }, py::arg("c"));
    m.def("mw_torsion_group", [](int c) { return group_name(mw_torsion_group(c)); }, py::arg("c"));
    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
