#pragma once

// Jacobian-rank scan over the F_q-rational points of the projective power-sum varieties.
// Over the algebraic closure smoothness is a stronger statement; this scan only sees the
// rational locus.

#include "ldrs/algebra/modular_matrix.hpp"
#include "ldrs/algebra/prime_field.hpp"
#include "ldrs/budget.hpp"
#include "ldrs/errors.hpp"
#include "ldrs/numeric.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace ldrs::varieties {

enum class ProjectiveVariety {
    cone,      ///< Xbar_{k,h} in P^{h-1}: sum x_i^j = 0
    centered,  ///< Xbar_{k,h,u} in P^h: sum x_i^j = h_j x_{h+1}^j
};

inline std::string variety_id(ProjectiveVariety v) {
    return v == ProjectiveVariety::cone ? "Xbar_{k,h}" : "Xbar_{k,h,u}";
}

struct SmoothnessReport {
    std::string variety;
    std::uint64_t q = 0;
    std::size_t k = 0;
    std::size_t h = 0;
    std::vector<std::uint64_t> targets;  ///< h_1..h_{k-1}; empty for the cone
    std::size_t ambient_dimension = 0;   ///< projective
    std::size_t expected_dimension = 0;
    std::uint64_t points_scanned = 0;    ///< projective F_q-points of the ambient space
    std::uint64_t rational_points = 0;   ///< projective F_q-points on the variety
    std::vector<std::vector<std::uint64_t>> singular_points;
    std::string verdict;
    std::string scope = "rational locus only";
};

namespace detail {

/// Values of the equations and the (k-1) x n Jacobian at a point of the ambient space.
struct LocalData {
    bool on_variety = true;
    algebra::ModMatrix jacobian;
};

inline LocalData local_data(const algebra::PrimeModulus& pm, std::size_t k, ProjectiveVariety kind,
                            const std::vector<std::uint64_t>& targets, const std::vector<std::uint64_t>& x) {
    const std::size_t n = x.size();
    const std::size_t h = kind == ProjectiveVariety::cone ? n : n - 1;
    LocalData d{true, algebra::ModMatrix(k - 1, n)};
    for (std::size_t j = 1; j < k; ++j) {
        std::uint64_t value = 0;
        for (std::size_t i = 0; i < h; ++i) {
            value = pm.add(value, pm.pow(x[i], j));
            d.jacobian.at(j - 1, i) = pm.mul(j % pm.value(), pm.pow(x[i], j - 1));
        }
        if (kind == ProjectiveVariety::centered) {
            const std::uint64_t hj = targets[j - 1];
            value = pm.sub(value, pm.mul(hj, pm.pow(x[h], j)));
            d.jacobian.at(j - 1, h) = pm.neg(pm.mul(pm.mul(j % pm.value(), hj), pm.pow(x[h], j - 1)));
        }
        if (value != 0) d.on_variety = false;
    }
    return d;
}

} // namespace detail

/// Scans projective points normalized so the first nonzero coordinate is 1.
inline SmoothnessReport jacobian_rank_scan(std::uint64_t q, std::size_t k, std::size_t h, ProjectiveVariety kind,
                                           const std::vector<std::uint64_t>& targets = {}, const Budget& budget = {}) {
    const algebra::PrimeModulus pm(q);
    if (h < 1) throw UsageError("jacobian scan needs h >= 1");
    if (k < 1 || k >= q) throw UsageError("jacobian scan needs 1 <= k < q");
    if (kind == ProjectiveVariety::centered && targets.size() != k - 1)
        throw UsageError("jacobian scan: centered variety needs k - 1 targets");
    SmoothnessReport rep;
    rep.variety = variety_id(kind);
    rep.q = q;
    rep.k = k;
    rep.h = h;
    if (kind == ProjectiveVariety::centered) rep.targets = targets;
    const std::size_t n = kind == ProjectiveVariety::cone ? h : h + 1;
    rep.ambient_dimension = n - 1;
    rep.expected_dimension = n - 1 - (k - 1);
    const std::uint64_t affine = saturating_pow(q, static_cast<unsigned>(n));
    budget.require_work(affine, "jacobian scan (q^n affine representatives)");

    std::vector<std::uint64_t> x(n, 0);
    for (std::size_t lead = 0; lead < n; ++lead) {
        // x = (0,..,0, 1, free...)
        const std::size_t free = n - lead - 1;
        const std::uint64_t total = saturating_pow(q, static_cast<unsigned>(free));
        for (std::uint64_t code = 0; code < total; ++code) {
            std::fill(x.begin(), x.end(), 0);
            x[lead] = 1;
            std::uint64_t c = code;
            for (std::size_t i = lead + 1; i < n; ++i) {
                x[i] = c % q;
                c /= q;
            }
            ++rep.points_scanned;
            if (k == 1) {
                ++rep.rational_points;
                continue;
            }
            const auto d = detail::local_data(pm, k, kind, targets, x);
            if (!d.on_variety) continue;
            ++rep.rational_points;
            if (algebra::rank(pm, d.jacobian) < k - 1) {
                // re-verified on insert
                const auto again = detail::local_data(pm, k, kind, targets, x);
                if (!again.on_variety || algebra::rank(pm, again.jacobian) >= k - 1)
                    throw VerificationError("jacobian scan: singular point failed re-verification");
                rep.singular_points.push_back(x);
            }
        }
    }
    rep.verdict = rep.singular_points.empty() ? "no singular rational points" : "singular rational points found";
    return rep;
}

} // namespace ldrs::varieties
