#include "ellmod/cli.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "ellmod/errors.hpp"
#include "ellmod/report.hpp"
#include "ellmod/singularities.hpp"
#include "ellmod/surface_invariants.hpp"

namespace ellmod::cli {

namespace {

struct Options {
    int c = 2;
    Int m = 2;
    std::string format = "table";
    std::optional<std::string> table;
    bool allow_skip = false;
    std::vector<Int> resolve_args;
};

std::string dot_for(const std::string& command, const Options& o) {
    std::ostringstream out;
    if (command == "resolve") {
        const auto& a = o.resolve_args;
        const QuotientSingularity s =
            a.size() == 2 ? normalize_weights(a[0], 1, a[1]) : normalize_weights(a[0], a[1], a[2]);
        out << chain_to_dot(resolve(s));
    } else if (command == "fixed-points") {
        int i = 0;
        for (const auto& fp : schreieder_fixed_points(o.c))
            out << chain_to_dot(hj_expansion(fp.singularity()), "point" + std::to_string(i++));
    } else if (command == "invariants") {
        std::vector<std::string> seen;
        for (const auto& p : schreieder_config(o.c).fibers) {
            const std::string name = p.fiber.to_string();
            if (std::find(seen.begin(), seen.end(), name) != seen.end()) continue;
            seen.push_back(name);
            out << fiber_to_dot(p.fiber, "fiber" + std::to_string(seen.size()));
        }
    } else {
        throw CLI::ValidationError("--format", "dot output is available for resolve, fixed-points and invariants");
    }
    return out.str();
}

Report build(const std::string& command, const Options& o, const CongruenceTable* table) {
    if (command == "resolve") {
        const auto& a = o.resolve_args;
        // Two arguments: r a, read as weights (1, a).
        return a.size() == 2 ? resolve_report(a[0], 1, a[1]) : resolve_report(a[0], a[1], a[2]);
    }
    if (command == "fixed-points") return fixed_points_report(o.c);
    if (command == "invariants") return invariants_report(o.c);
    if (command == "plurigenus") return plurigenus_report(o.c, o.m);
    if (command == "kodaira-dim") return kodaira_dim_report(o.c);
    if (command == "jprofile") return jprofile_report(o.c);
    if (command == "gamma") return gamma_report(o.c, table);
    if (command == "mordell-weil") return mordell_weil_report(o.c);
    VerifyOptions vo;
    vo.c = o.c;
    vo.table = table;
    return verify_report(vo);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations on the elliptic surfaces X_c", "ellmod"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub, bool needs_m, bool needs_table) {
        if (needs_m) sub->add_option("--m", o.m, "pluricanonical degree m >= 2")->capture_default_str();
        if (needs_table) {
            sub->add_option("--table", o.table, "congruence-subgroup table (default: $" + std::string(kTableEnvVar) + ")");
            sub->add_flag("--allow-skip", o.allow_skip, "exit 0 when table-dependent checks are skipped");
        }
        sub->add_option("--format", o.format, "json, table or dot")
            ->check(CLI::IsMember({"json", "table", "dot"}))
            ->capture_default_str();
    };

    auto* resolve_cmd = app.add_subcommand("resolve", "resolve 1/r(w1,w2), or 1/r(1,a) with two arguments");
    resolve_cmd->add_option("args", o.resolve_args, "r a | r w1 w2")->required()->expected(2, 3);
    add_common(resolve_cmd, false, false);

    struct Spec {
        const char* name;
        const char* help;
        bool m;
        bool table;
    };
    const Spec specs[] = {
        {"fixed-points", "the nine fixed points of the diagonal action and their singularities", false, false},
        {"invariants", "Euler number, Hodge numbers, Picard number and Mordell-Weil rank", false, false},
        {"plurigenus", "P_m by enumeration of surviving product forms", true, false},
        {"kodaira-dim", "growth class of P_m", false, false},
        {"jprofile", "degree and ramification of the j-map", false, false},
        {"gamma", "monodromy presentation, cusp signature and congruence test", false, true},
        {"mordell-weil", "sections and torsion group", false, false},
        {"verify", "run every cross-check", false, true},
    };
    for (const Spec& s : specs) {
        auto* sub = app.add_subcommand(s.name, s.help);
        sub->add_option("--c", o.c, "tower depth c >= 2")->capture_default_str();
        add_common(sub, s.m, s.table);
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        if (o.format == "dot") {
            out << dot_for(command, o);
            return kExitOk;
        }
        std::optional<CongruenceTable> table;
        if (command == "gamma" || command == "verify") table = load_table(o.table);
        const Report rep = build(command, o, table ? &*table : nullptr);
        if (o.format == "json") out << rep.to_json().dump(2) << "\n";
        else out << render_table(rep);
        for (const auto& c : rep.checks)
            if (c.status == CheckStatus::Fail) return kExitCheckFailed;
        if (rep.any_skipped() && !o.allow_skip) return kExitCheckFailed;
        return kExitOk;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace ellmod::cli
