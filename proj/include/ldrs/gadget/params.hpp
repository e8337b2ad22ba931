#pragma once

// Parameter selection for the locally dense gadget, with every inequality evaluated exactly.

#include "ldrs/algebra/prime_field.hpp"
#include "ldrs/errors.hpp"
#include "ldrs/numeric.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace ldrs::gadget {

struct GadgetParams {
    std::string mode;  ///< "selected" (floor rules from q) or "explicit" (k, h, r given)
    Rational p = 1;
    Rational epsilon = 0;
    Rational epsilon1 = 0;
    Rational delta = 0;
    Rational epsilon2 = 0;  ///< eps - 2 eps1 (1 + eps)
    std::uint64_t q = 0;
    std::int64_t k = 0;
    std::int64_t h = 0;
    std::int64_t r = 0;
    Rational alpha_pow_p = 0;  ///< alpha^p = (1 + eps) / 2; alpha itself is never materialized
    std::int64_t ell = 0;      ///< 2k
    std::int64_t two_k_floor = 0;  ///< floor(q^eps1)
    std::map<std::string, bool> feasibility;
    bool regime_reached = false;
};

namespace detail {

inline Rational final_min_bound(const Rational& eps, const Rational& eps1, std::int64_t k) {
    const Rational gap = eps / 2 - eps1 * (1 + eps);
    const Rational a = 2 * gap * k - 5;
    const Rational b = eps1 * (1 + eps) * k / 4 - 1;
    return a < b ? a : b;
}

inline void evaluate(GadgetParams& g) {
    auto& f = g.feasibility;
    f.clear();
    const Rational& eps = g.epsilon;
    const Integer q = g.q;
    const Rational gap = eps / 2 - g.epsilon1 * (1 + eps);
    f["epsilon_in_unit_interval"] = eps > 0 && eps < 1;
    f["epsilon1_hypothesis"] = g.epsilon1 > 0 && g.epsilon1 < eps / (2 * (1 + eps)) && eps / (2 * (1 + eps)) < Rational(1, 4);
    f["delta_lt_epsilon1"] = g.delta > 0 && g.delta < g.epsilon1;
    f["k_at_least_1"] = g.k >= 1;
    f["k_at_least_2"] = g.k >= 2;
    f["k_le_half_q"] = 2 * g.k <= static_cast<std::int64_t>(g.q);
    f["h_lt_sqrt_q"] = Integer(g.h) * g.h < q;
    f["h_lt_half_sqrt_q"] = 4 * Integer(g.h) * g.h < q;
    f["h_gt_k"] = g.h > g.k;
    f["r_at_least_1"] = g.r >= 1;
    f["r_lt_h_minus_k"] = g.r < g.h - g.k;
    f["r_lt_final_min"] = Rational(g.r) < final_min_bound(eps, g.epsilon1, g.k);
    f["large_q_weak"] = gap * g.k - 2 >= 2;
    f["large_q_projection"] = gap * g.k - Rational(g.r + 3, 2) >= 1;
    f["h_within_alpha_ball"] = Rational(g.h) <= g.alpha_pow_p * g.ell;
    if (g.mode == "explicit") {
        f["k_follows_floor_rule"] = g.k == g.two_k_floor / 2;
        f["h_follows_floor_rule"] = Integer(g.h) == floor_of((1 + eps) * g.k);
    }
    bool all = true;
    for (const auto& [name, ok] : f) all = all && ok;
    g.regime_reached = all;
}

inline void set_common(GadgetParams& g, const Rational& p, const Rational& eps, std::uint64_t q) {
    if (p < 1) throw UsageError("norm index p must be >= 1, got " + rational_string(p));
    algebra::PrimeModulus pm(q);
    g.p = p;
    g.epsilon = eps;
    g.q = q;
    g.epsilon1 = eps / (4 * (1 + eps));
    g.delta = g.epsilon1 / 2;
    g.epsilon2 = eps - 2 * g.epsilon1 * (1 + eps);
    g.alpha_pow_p = (1 + eps) / 2;
    g.two_k_floor = floor_rational_power(q, g.epsilon1).convert_to<std::int64_t>();
}

} // namespace detail

/// Floor-rule parameters from (p, eps, q): eps1 is the midpoint of (0, eps/(2(1+eps))), delta = eps1/2,
/// 2k = floor(q^eps1) rounded down to even, h = floor((1+eps)k), r = floor(q^delta).
/// Infeasible desk-scale choices are flagged, not rejected.
inline GadgetParams select_params(const Rational& p, const Rational& eps, std::uint64_t q) {
    if (eps <= 0 || eps >= 1) throw UsageError("epsilon must lie in (0,1), got " + rational_string(eps));
    GadgetParams g;
    g.mode = "selected";
    detail::set_common(g, p, eps, q);
    g.k = g.two_k_floor / 2;
    g.h = floor_of((1 + eps) * g.k).convert_to<std::int64_t>();
    g.r = floor_rational_power(q, g.delta).convert_to<std::int64_t>();
    g.ell = 2 * g.k;
    detail::evaluate(g);
    return g;
}

/// Parameters for a hand-picked instance. eps defaults to (h - k)/k, the smallest value with
/// h <= floor((1+eps)k).
inline GadgetParams explicit_params(std::uint64_t q, std::int64_t k, std::int64_t h, std::int64_t r, const Rational& p,
                                    std::optional<Rational> eps = std::nullopt) {
    algebra::PrimeModulus pm(q);
    if (k < 2 || static_cast<std::uint64_t>(k) >= q) throw UsageError("gadget needs 1 < k < q");
    if (2 * k > static_cast<std::int64_t>(q)) throw UsageError("gadget needs k <= q/2 for the minimum-distance lemma");
    if (h < 1 || static_cast<std::uint64_t>(h) > q) throw UsageError("gadget needs 1 <= h <= q");
    if (r < 0) throw UsageError("projection rank r must be >= 0");
    if (r > h - k)
        throw UsageError("projection rank r = " + std::to_string(r) + " exceeds h - k = " + std::to_string(h - k) +
                         "; the final construction needs r < h - k");
    Rational e;
    if (eps) e = *eps;
    else if (h > k) e = Rational(h - k, k);
    else throw UsageError("h <= k: pass --eps explicitly");
    if (e <= 0 || e >= 1) throw UsageError("epsilon must lie in (0,1), got " + rational_string(e));
    GadgetParams g;
    g.mode = "explicit";
    detail::set_common(g, p, e, q);
    g.k = k;
    g.h = h;
    g.r = r;
    g.ell = 2 * k;
    if (Rational(h) > g.alpha_pow_p * g.ell)
        throw UsageError("h = " + std::to_string(h) + " exceeds floor(alpha^p * 2k) = " +
                         floor_of(g.alpha_pow_p * g.ell).str());
    detail::evaluate(g);
    return g;
}

} // namespace ldrs::gadget
