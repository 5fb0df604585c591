#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ellmod/modular_monodromy.hpp"

namespace ellmod {

using Json = nlohmann::ordered_json;

enum class CheckStatus { Pass, Fail, Skipped };

struct Check {
    std::string name;
    CheckStatus status;
    std::string details;
};

/// Result of one CLI command: what ran, with which parameters, what it computed,
/// and every consistency check it performed.
struct Report {
    std::string command;
    Json parameters = Json::object();
    Json results = Json::object();
    std::vector<Check> checks;

    void check(std::string name, bool ok, std::string details = {});
    void skip(std::string name, std::string details);

    bool all_passed() const;
    bool any_skipped() const;
    Json to_json() const;
};

std::string to_string(CheckStatus s);

struct VerifyOptions {
    int c = 2;
    Int plurigenus_m_max = 8;
    const CongruenceTable* table = nullptr;
};

Report resolve_report(Int r, Int w1, Int w2);
Report fixed_points_report(int c);
Report invariants_report(int c);
Report plurigenus_report(int c, Int m);
Report kodaira_dim_report(int c);
Report jprofile_report(int c);
Report gamma_report(int c, const CongruenceTable* table);
Report mordell_weil_report(int c);
Report verify_report(const VerifyOptions& opts);

/// Indented `key: value` rendering of a report for terminals.
std::string render_table(const Report& report);

}  // namespace ellmod
