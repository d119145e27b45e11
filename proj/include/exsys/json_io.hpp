#pragma once

#include "exsys/parse.hpp"
#include "exsys/series.hpp"
#include "exsys/verify.hpp"

#include <nlohmann/json.hpp>

namespace exsys {

using json = nlohmann::json;

inline constexpr int report_schema_version = 1;

template <Semiring S>
json pair_to_json(const Pair<S>& c) {
    return json::array({S::format(c.pos), S::format(c.neg)});
}

template <Semiring S>
Pair<S> pair_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("coefficient must be a [pos, neg] array");
    auto scalar = [](const json& s) {
        if (s.is_string()) return S::parse(s.get<std::string>());
        if (s.is_number_integer()) return S::parse(std::to_string(s.get<long long>()));
        throw std::invalid_argument("scalar must be a decimal string");
    };
    return Pair<S>{scalar(j[0]), scalar(j[1])};
}

// {"x5^x3^x1": ["1", "0"], ...}
template <Semiring S>
json wedge_to_json(const Wedge<S>& u) {
    json out = json::object();
    for (const auto& [k, c] : u) out[format_wedge_key(k)] = pair_to_json(c);
    return out;
}

WedgeKey wedge_key_from_string(const std::string& s);

template <Semiring S>
Wedge<S> wedge_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("wedge element must be a JSON object");
    Wedge<S> out;
    for (const auto& [name, value] : j.items()) {
        std::vector<int> exps;
        for (int e : wedge_key_from_string(name)) exps.push_back(e);
        out += wedge_monomial<S>(exps, pair_from_json<S>(value));
    }
    return out;
}

template <Semiring S>
json series_to_json(const BiSeries<S>& s) {
    json terms = json::array();
    for (auto [z, w] : s.support()) terms.push_back({{"z", z}, {"w", w}, {"value", wedge_to_json(s.coefficient(z, w))}});
    json window = json::array();
    for (Var v : {Var::z, Var::w}) {
        auto m = s.valid_max(v);
        window.push_back(m ? json(*m) : json(nullptr));
    }
    return {{"terms", terms}, {"window", window}, {"exact", {s.is_exact(Var::z), s.is_exact(Var::w)}}};
}

template <Semiring S>
BiSeries<S> series_from_json(const json& j) {
    std::vector<typename BiSeries<S>::term_type> raw;
    for (const auto& t : j.at("terms")) {
        const int z = t.at("z").get<int>();
        const int w = t.at("w").get<int>();
        for (const auto& [k, c] : wedge_from_json<S>(t.at("value"))) raw.push_back({SeriesKey{z, w, k}, c});
    }
    std::optional<int> zv, wv;
    if (j.contains("window")) {
        const auto& win = j.at("window");
        if (!win.at(0).is_null()) zv = win.at(0).get<int>();
        if (!win.at(1).is_null()) wv = win.at(1).get<int>();
    }
    return BiSeries<S>::from_terms(std::move(raw), zv, wv);
}

json config_to_json(const CheckConfig& cfg);
json report_to_json(const CheckReport& r);
json suite_to_json(const CheckConfig& cfg, const SuiteResult& result);

}  // namespace exsys
