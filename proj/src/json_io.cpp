#include "exsys/json_io.hpp"

#include <cctype>

namespace exsys {

WedgeKey wedge_key_from_string(const std::string& s) {
    WedgeKey key;
    if (s == "1") return key;
    std::vector<int> exps;
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] != 'x') throw std::invalid_argument("bad wedge key '" + s + "'");
        std::size_t j = ++i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) throw std::invalid_argument("bad wedge key '" + s + "'");
        exps.push_back(std::stoi(s.substr(i, j - i)));
        i = j;
        if (i < s.size()) {
            if (s[i] != '^') throw std::invalid_argument("bad wedge key '" + s + "'");
            ++i;
        }
    }
    key.assign(exps.begin(), exps.end());
    return key;
}

json config_to_json(const CheckConfig& cfg) {
    json j{{"semirings", cfg.semirings},
           {"rmax", cfg.rmax},
           {"weight", cfg.weight},
           {"zmax", cfg.zmax},
           {"wmax", cfg.wmax},
           {"pieri_max", cfg.pieri_max},
           {"checks", cfg.checks.empty() ? all_check_names() : cfg.checks}};
    j["n"] = cfg.bound.n ? json(*cfg.bound.n) : json(nullptr);
    return j;
}

json report_to_json(const CheckReport& r) {
    json j{{"check", r.check},
           {"semiring", r.semiring},
           {"r", r.r},
           {"lambda", format_partition(r.lambda)},
           {"verdict", verdict_name(r.verdict)}};
    if (r.witness)
        j["witness"] = {{"z", r.witness->z}, {"w", r.witness->w}, {"key", format_wedge_key(r.witness->key)}};
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

json suite_to_json(const CheckConfig& cfg, const SuiteResult& result) {
    json reports = json::array();
    for (const auto& r : result.reports) reports.push_back(report_to_json(r));
    const auto& s = result.summary;
    return {{"schema_version", report_schema_version},
            {"config", config_to_json(cfg)},
            {"header", {{"prefactor", s.prefactor}, {"warnings", s.warnings}}},
            {"summary", {{"holds", s.holds}, {"fails", s.fails}, {"inconclusive", s.inconclusive}}},
            {"reports", reports}};
}

}  // namespace exsys
