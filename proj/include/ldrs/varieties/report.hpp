#pragma once

#include "ldrs/budget.hpp"
#include "ldrs/numeric.hpp"
#include "ldrs/varieties/bounds.hpp"
#include "ldrs/varieties/counting.hpp"
#include "ldrs/varieties/dimension.hpp"
#include "ldrs/varieties/smoothness.hpp"

#include <json.hpp>

#include <map>
#include <vector>

namespace ldrs::varieties {

struct ExtensionRow {
    unsigned e = 1;
    Integer count = 0;       ///< |X_{k,h,u}(F_{q^e})|
    BoundCheck point_bound;  ///< against q^{e(h-k+1)}
    Integer y = 0;           ///< |Y_{k,h,u}(F_{q^e})|
    BoundCheck y_bound;      ///< against q^{e(h-k)}; present when h >= k
    bool y_checked = false;
};

struct PointCountReport {
    std::uint64_t q = 0;
    std::size_t k = 0;
    std::size_t h = 0;
    std::vector<std::uint64_t> targets;
    Integer n = 0;            ///< N_h(q)
    Integer n_star = 0;       ///< N*_h(q)
    Integer subsets = 0;      ///< N* / h!
    Integer y = 0;            ///< |Y_{k,h,u}(F_q)|
    Integer sieve_bound = 0;  ///< N - C(h,2) Y
    bool sieve_holds = false;
    Integer main_term = 0;    ///< q^{h-k+1}
    BettiBound betti;
    std::map<unsigned, ExtensionRow> extensions;
    bool pass = false;        ///< every applicable inequality holds
};

/// Counts and bound checks for X_{k,h,u} with the given targets (canonical center when empty).
inline PointCountReport make_point_count_report(std::uint64_t q, std::size_t k, std::size_t h,
                                                const std::vector<unsigned>& degrees, const Budget& budget = {},
                                                std::vector<std::uint64_t> targets = {}) {
    PowerSumSystem sys = targets.empty() ? system_for_prefix(q, k, h) : system_for_targets(q, k, std::move(targets), h);
    PointCountReport r;
    r.q = q;
    r.k = k;
    r.h = h;
    r.targets = sys.targets;
    r.n = count_points(sys, budget, 1);
    PowerSumSystem distinct = sys;
    distinct.distinct = true;
    r.subsets = count_subsets(distinct, budget);
    r.n_star = factorial(static_cast<unsigned>(h)) * r.subsets;
    r.y = count_hyperplane_section(sys, 1, budget);
    r.sieve_bound = sieve_lower_bound(r.n, r.y, h);
    r.sieve_holds = r.n_star >= r.sieve_bound && r.n_star <= r.n;
    r.main_term = h + 1 >= k ? ipow(Integer(q), static_cast<unsigned>(h + 1 - k)) : Integer(0);
    r.betti = betti_bound(h, k, h, k - 1 <= h ? k - 1 : h);
    bool ok = r.sieve_holds;
    for (unsigned e : degrees) {
        ExtensionRow row;
        row.e = e;
        row.count = e == 1 ? r.n : count_extension(sys, e, budget);
        if (h + 1 >= k) {
            row.point_bound = check_point_count_bound(row.count, q, e, k, h);
            if (row.point_bound.applicable) ok = ok && row.point_bound.pass;
        }
        row.y = e == 1 ? r.y : count_hyperplane_section(sys, e, budget);
        if (h >= k) {
            row.y_checked = true;
            row.y_bound = check_hyperplane_bound(row.y, q, e, k, h);
            if (row.y_bound.applicable) ok = ok && row.y_bound.pass;
        }
        r.extensions.emplace(e, std::move(row));
    }
    if (k <= h) ok = ok && r.betti.below_half_2k_h;
    r.pass = ok;
    return r;
}

inline nlohmann::json bound_json(const BoundCheck& b) {
    return {{"applicable", b.applicable},       {"main_term", to_decimal(b.main_term)},
            {"deviation", to_decimal(b.deviation)}, {"lhs_squared", to_decimal(b.lhs_squared)},
            {"rhs_squared", to_decimal(b.rhs_squared)}, {"pass", b.pass}};
}

inline nlohmann::json to_json(const PointCountReport& r) {
    nlohmann::json ext = nlohmann::json::object();
    for (const auto& [e, row] : r.extensions) {
        nlohmann::json j{{"count", to_decimal(row.count)}, {"y_count", to_decimal(row.y)}};
        if (row.point_bound.rhs_squared != 0) j["point_bound"] = bound_json(row.point_bound);
        if (row.y_checked) j["y_bound"] = bound_json(row.y_bound);
        ext[std::to_string(e)] = j;
    }
    nlohmann::json targets = nlohmann::json::array();
    for (auto t : r.targets) targets.push_back(std::to_string(t));
    return {{"schema", "point-count-v1"},
            {"q", std::to_string(r.q)},
            {"k", std::to_string(r.k)},
            {"h", std::to_string(r.h)},
            {"targets", targets},
            {"N", to_decimal(r.n)},
            {"Nstar", to_decimal(r.n_star)},
            {"S2_size", to_decimal(r.subsets)},
            {"Y", to_decimal(r.y)},
            {"sieve_bound", to_decimal(r.sieve_bound)},
            {"sieve_holds", r.sieve_holds},
            {"main_term", to_decimal(r.main_term)},
            {"deligne_rhs", "(1/2)(2k)^h q^(e(h-k+2)/2), compared squared"},
            {"betti_bound",
             {{"general", to_decimal(r.betti.general)},
              {"simplified", to_decimal(r.betti.simplified)},
              {"half_2k_pow_h", to_decimal(r.betti.half_2k_h)},
              {"simplified_below_half_2k_pow_h", r.betti.below_half_2k_h}}},
            {"extension_counts", ext},
            {"pass", r.pass}};
}

inline nlohmann::json to_json(const SmoothnessReport& s) {
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : s.singular_points) {
        nlohmann::json row = nlohmann::json::array();
        for (auto v : p) row.push_back(std::to_string(v));
        pts.push_back(row);
    }
    nlohmann::json targets = nlohmann::json::array();
    for (auto t : s.targets) targets.push_back(std::to_string(t));
    return {{"schema", "smoothness-v1"},
            {"variety", s.variety},
            {"q", std::to_string(s.q)},
            {"k", std::to_string(s.k)},
            {"h", std::to_string(s.h)},
            {"targets", targets},
            {"ambient_dimension", std::to_string(s.ambient_dimension)},
            {"expected_dimension", std::to_string(s.expected_dimension)},
            {"points_scanned", std::to_string(s.points_scanned)},
            {"rational_points", std::to_string(s.rational_points)},
            {"singular_points", pts},
            {"verdict", s.verdict},
            {"scope", s.scope}};
}

inline nlohmann::json to_json(const DimensionEstimate& d) {
    nlohmann::json lv = nlohmann::json::object();
    for (const auto& [e, l] : d.levels) {
        nlohmann::json j{{"count", to_decimal(l.count)}, {"empty", l.empty}, {"agrees", l.agrees}};
        if (!l.empty) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.6f", l.estimate);
            j["estimate"] = buf;
        }
        lv[std::to_string(e)] = j;
    }
    return {{"expected", std::to_string(d.expected)}, {"tolerance", "1/2"}, {"levels", lv},
            {"empty_over_fq", d.empty_over_fq}, {"agrees", d.agrees}, {"status", d.status}};
}

} // namespace ldrs::varieties
