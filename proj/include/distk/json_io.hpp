#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "distk/constructions.hpp"
#include "distk/search.hpp"
#include "distk/verify.hpp"

namespace distk {

inline const char* to_string(ClassFilter f) {
    switch (f) {
        case ClassFilter::All: return "all";
        case ClassFilter::Connected: return "connected";
        case ClassFilter::TriangleFreeNonbipartite: return "triangle-free-nonbipartite";
    }
    return "?";
}

inline const char* to_string(Source s) { return s == Source::Internal ? "internal" : "file"; }

// Closed-form comparison value for a problem, when one applies.
inline std::optional<long long> formula_value_for(const SearchProblem& p) {
    if (p.t != 2) return std::nullopt;
    if (p.k == 2 && p.n >= 5) return ex2_bound(p.n);
    if (p.k == 3 && p.n >= 4) return ex3_bound(p.n).value;
    if (p.k >= 4 && p.n >= p.k + 1) return tu_bound(p.n, p.k).floor_value();
    return std::nullopt;
}

inline nlohmann::json outcome_to_json(const SearchProblem& p, const SearchOutcome& o) {
    nlohmann::json j;
    j["problem"] = {{"n", p.n},
                    {"k", p.k},
                    {"t", p.t},
                    {"class", to_string(p.filter)},
                    {"source", to_string(p.source)}};
    j["optimum"] = o.optimum;
    if (auto formula = formula_value_for(p)) j["formula_value"] = *formula;
    j["extremal_count"] = o.extremal.size();
    j["witnesses"] = o.witness_g6();
    j["enumerated"] = o.enumerated;
    j["elapsed_ms"] = o.elapsed_ms;
    return j;
}

inline nlohmann::json report_to_json(const VerificationReport& r) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"n", row.n},
                        {"computed", row.computed},
                        {"expected", row.expected},
                        {"match", row.match},
                        {"witnesses_path", row.witnesses_path}});
    return {{"claim_id", r.claim_id},
            {"n_range", {r.n_lo, r.n_hi}},
            {"rows", rows},
            {"overall", r.overall ? "pass" : "fail"},
            {"tool_version", r.tool_version},
            {"timestamp", r.timestamp}};
}

namespace detail {

inline std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

}  // namespace detail

inline std::string report_to_csv(const VerificationReport& r) {
    std::string out = "n,computed,expected,match,witnesses_path\n";
    for (const auto& row : r.rows) {
        out += std::to_string(row.n) + ',' + detail::csv_quote(row.computed) + ',' +
               detail::csv_quote(row.expected) + ',' + (row.match ? "true" : "false") + ',' +
               detail::csv_quote(row.witnesses_path) + '\n';
    }
    return out;
}

// Construction spec as a small JSON object: {"variant": ..., fields...}.
inline ConstructionSpec construction_from_json(const nlohmann::json& j) {
    std::string variant = j.at("variant").get<std::string>();
    if (variant == "turan") return TuranSpec{j.at("n").get<int>(), j.at("r").get<int>()};
    if (variant == "g2_extremal")
        return G2ExtremalSpec{j.at("n").get<int>(), j.at("size_a").get<int>(),
                              j.at("size_b_prime").get<int>()};
    if (variant == "double_broom")
        return DoubleBroomSpec{j.at("n").get<int>(), j.at("k").get<int>(), j.at("a").get<int>(),
                               j.at("b").get<int>()};
    if (variant == "t_broom")
        return TBroomSpec{j.at("k").get<int>(), j.at("t").get<int>(),
                          j.at("leaf_counts").get<std::vector<int>>()};
    if (variant == "spider") {
        int n = j.at("n").get<int>();
        int legs = j.at("legs").get<int>();
        std::vector<int> counts = j.contains("attachment_counts")
                                      ? j.at("attachment_counts").get<std::vector<int>>()
                                      : spider_round_robin_attachment(n, legs);
        return SpiderSpec{n, legs, counts};
    }
    throw std::invalid_argument("construction: unknown variant '" + variant + "'");
}

inline nlohmann::json construction_to_json(const ConstructionSpec& spec) {
    return std::visit(
        [](const auto& s) -> nlohmann::json {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, TuranSpec>)
                return {{"variant", "turan"}, {"n", s.n}, {"r", s.r}};
            if constexpr (std::is_same_v<T, G2ExtremalSpec>)
                return {{"variant", "g2_extremal"},
                        {"n", s.n},
                        {"size_a", s.size_a},
                        {"size_b_prime", s.size_b_prime}};
            if constexpr (std::is_same_v<T, DoubleBroomSpec>)
                return {{"variant", "double_broom"}, {"n", s.n}, {"k", s.k}, {"a", s.a}, {"b", s.b}};
            if constexpr (std::is_same_v<T, TBroomSpec>)
                return {{"variant", "t_broom"},
                        {"k", s.k},
                        {"t", s.t},
                        {"leaf_counts", s.leaf_counts}};
            if constexpr (std::is_same_v<T, SpiderSpec>)
                return {{"variant", "spider"},
                        {"n", s.n},
                        {"legs", s.legs},
                        {"attachment_counts", s.attachment_counts}};
        },
        spec);
}

}  // namespace distk
