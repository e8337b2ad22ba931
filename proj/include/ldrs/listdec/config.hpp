#pragma once

// Explicit Reed-Solomon list-decoding configurations built from the coset set S_2(y, h).
//
// Center v = evaluations of f_y(t) = prod (t - a_i)^{y_i}. For a member x, f_y - f_x has degree
// at most h - k (the top k coefficients of both monic degree-h polynomials are fixed by the
// shared power sums), and it agrees with v exactly on the roots of f_x.

#include "ldrs/algebra/polynomial.hpp"
#include "ldrs/budget.hpp"
#include "ldrs/gadget/s2.hpp"
#include "ldrs/numeric.hpp"

#include <json.hpp>

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ldrs::listdec {

using algebra::Polynomial;
using algebra::PrimeModulus;

struct ConfigEntry {
    std::vector<std::uint64_t> support;    ///< member x of S_2
    std::vector<std::uint64_t> codeword;   ///< evaluations of f_y - f_x at a_1..a_q
    std::vector<std::uint64_t> agreement;  ///< positions where codeword == center
    long degree = -1;                      ///< degree recovered by interpolation
};

struct ListDecodingConfig {
    std::uint64_t q = 0;
    std::size_t k = 0;
    std::size_t h = 0;
    std::vector<std::uint64_t> center;  ///< v
    std::size_t code_dimension = 0;     ///< h - k + 1
    std::vector<ConfigEntry> entries;
    Rational ratio = 0;                 ///< h / (h - k + 1)
    std::size_t radius = 0;             ///< q - h
    std::size_t code_min_distance = 0;  ///< q + k - h
    bool radius_below_min_distance = false;
};

inline std::string support_string(const std::vector<std::uint64_t>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

inline std::vector<std::uint64_t> evaluations(const Polynomial& f, std::uint64_t q) {
    std::vector<std::uint64_t> out(q);
    for (std::uint64_t a = 0; a < q; ++a) out[a] = f.evaluate(a);
    return out;
}

/// The unique polynomial of degree < `nodes` through the first `nodes` points, if the whole word
/// lies on it; nullopt otherwise.
inline std::optional<Polynomial> low_degree_fit(const PrimeModulus& pm, const std::vector<std::uint64_t>& word,
                                                std::size_t nodes) {
    std::vector<std::uint64_t> xs, ys;
    for (std::size_t i = 0; i < nodes && i < word.size(); ++i) {
        xs.push_back(i);
        ys.push_back(word[i]);
    }
    Polynomial p = algebra::interpolate(pm, xs, ys);
    for (std::uint64_t a = 0; a < word.size(); ++a)
        if (p.evaluate(a) != word[a]) return std::nullopt;
    return p;
}

/// Center word for a binary y: evaluations of prod_{y_i = 1} (t - a_i).
inline std::vector<std::uint64_t> center_word(std::uint64_t q, const std::vector<std::uint64_t>& support) {
    const PrimeModulus pm(q);
    return evaluations(Polynomial::from_roots(pm, support), q);
}

inline ListDecodingConfig build_config(const gadget::S2Set& s2, const std::vector<std::uint64_t>& y_support,
                                       std::uint64_t q, std::size_t k, std::size_t h) {
    const PrimeModulus pm(q);
    if (!s2.complete) throw UsageError("list-decoding config needs a complete S2 enumeration");
    if (k < 1 || h < k || h > q) throw UsageError("list-decoding config needs 1 <= k <= h <= q");
    if (y_support.size() != h) throw UsageError("center support must have h elements");
    ListDecodingConfig c;
    c.q = q;
    c.k = k;
    c.h = h;
    c.code_dimension = h - k + 1;
    c.ratio = Rational(h, c.code_dimension);
    c.radius = q - h;
    c.code_min_distance = q + k - h;
    c.radius_below_min_distance = c.radius < c.code_min_distance;
    const Polynomial fy = Polynomial::from_roots(pm, y_support);
    c.center = evaluations(fy, q);
    std::set<std::vector<std::uint64_t>> seen;
    for (const auto& x : s2.members) {
        const Polynomial fx = Polynomial::from_roots(pm, x);
        ConfigEntry e;
        e.support = x;
        e.codeword = evaluations(fy - fx, q);
        const auto fit = low_degree_fit(pm, e.codeword, c.code_dimension);
        if (!fit) throw VerificationError("member " + support_string(x) + ": codeword degree exceeds h - k");
        e.degree = fit->degree();
        for (std::uint64_t a = 0; a < q; ++a)
            if (e.codeword[a] == c.center[a]) e.agreement.push_back(a);
        if (e.agreement != x) throw VerificationError("member " + support_string(x) + ": agreement set differs from its support");
        if (!seen.insert(e.codeword).second) throw VerificationError("member " + support_string(x) + ": duplicate codeword");
        c.entries.push_back(std::move(e));
    }
    return c;
}

struct CloseCodewordCount {
    Integer m = 0;
    std::string method;  ///< "exhaustive" or "agreement-sets"
};

/// M_q(v, k, h): codewords of RS_q(h - k + 1) agreeing with v in at least h positions.
inline CloseCodewordCount count_all_close_codewords(const std::vector<std::uint64_t>& center, std::uint64_t q,
                                                    std::size_t k, std::size_t h, const Budget& budget = {}) {
    const PrimeModulus pm(q);
    if (center.size() != q) throw UsageError("center must have q entries");
    if (k < 1 || h < k || h > q) throw UsageError("close-codeword count needs 1 <= k <= h <= q");
    const std::size_t dim = h - k + 1;
    CloseCodewordCount out;
    const std::uint64_t messages = saturating_pow(q, static_cast<unsigned>(dim));
    if (messages <= budget.max_enumeration) {
        out.method = "exhaustive";
        budget.require_work(saturating_mul(messages, q), "exhaustive close-codeword count");
        std::vector<std::uint64_t> coeffs(dim, 0);
        for (std::uint64_t code = 0; code < messages; ++code) {
            std::uint64_t c = code;
            for (std::size_t i = 0; i < dim; ++i) {
                coeffs[i] = c % q;
                c /= q;
            }
            std::size_t agree = 0;
            for (std::uint64_t a = 0; a < q; ++a) {
                std::uint64_t v = 0;
                for (std::size_t i = dim; i-- > 0;) v = pm.add(pm.mul(v, a), coeffs[i]);
                if (v == center[a]) ++agree;
            }
            if (agree >= h) ++out.m;
        }
        return out;
    }
    const Integer subsets = binomial(static_cast<unsigned>(q), static_cast<unsigned>(h));
    if (subsets > budget.max_enumeration)
        throw CapacityError("close-codeword count: both q^(h-k+1) and C(q,h) exceed the enumeration budget",
                            std::min<std::uint64_t>(messages, subsets > Integer(~0ull) ? ~0ull : subsets.convert_to<std::uint64_t>()),
                            budget.max_enumeration);
    out.method = "agreement-sets";
    std::set<std::vector<std::uint64_t>> found;
    std::vector<std::uint64_t> pick(h);
    for (std::size_t i = 0; i < h; ++i) pick[i] = i;
    while (true) {
        std::vector<std::uint64_t> xs(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(dim)), ys;
        for (auto x : xs) ys.push_back(center[x]);
        const Polynomial p = algebra::interpolate(pm, xs, ys);
        bool ok = true;
        for (std::size_t i = dim; i < h && ok; ++i) ok = p.evaluate(pick[i]) == center[pick[i]];
        if (ok) found.insert(p.coefficients());
        std::size_t i = h;
        while (i > 0 && pick[i - 1] == q - h + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < h; ++j) pick[j] = pick[j - 1] + 1;
    }
    out.m = found.size();
    return out;
}

inline nlohmann::json to_json(const ListDecodingConfig& c, const std::optional<CloseCodewordCount>& m) {
    using nlohmann::json;
    auto strings = [](const std::vector<std::uint64_t>& v) {
        json a = json::array();
        for (auto x : v) a.push_back(std::to_string(x));
        return a;
    };
    json entries = json::array();
    for (const auto& e : c.entries)
        entries.push_back({{"support", strings(e.support)},
                           {"codeword", strings(e.codeword)},
                           {"agreement", strings(e.agreement)},
                           {"degree", std::to_string(e.degree)}});
    json out{{"schema", "listdec-v1"},
             {"q", std::to_string(c.q)},
             {"k", std::to_string(c.k)},
             {"h", std::to_string(c.h)},
             {"center", strings(c.center)},
             {"code_dimension", std::to_string(c.code_dimension)},
             {"members", entries},
             {"list_length", std::to_string(c.entries.size())},
             {"ratio", rational_string(c.ratio)},
             {"radius", std::to_string(c.radius)},
             {"code_min_distance", std::to_string(c.code_min_distance)},
             {"radius_below_min_distance", c.radius_below_min_distance}};
    if (m) {
        out["M"] = to_decimal(m->m);
        out["M_method"] = m->method;
        out["M_is_lower_bound"] = false;
    } else {
        out["M"] = std::to_string(c.entries.size());
        out["M_method"] = "list length";
        out["M_is_lower_bound"] = true;
    }
    return out;
}

} // namespace ldrs::listdec
