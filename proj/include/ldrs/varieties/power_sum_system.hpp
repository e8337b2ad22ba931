#pragma once

#include "ldrs/algebra/prime_field.hpp"
#include "ldrs/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace ldrs::varieties {

/// The affine system sum_{i<=n} x_i^j = h_j (j = 1..k-1) over F_q, optionally with forbidden
/// coordinate values and a distinct-coordinate requirement.
struct PowerSumSystem {
    std::uint64_t q = 0;
    std::size_t k = 0;
    std::vector<std::uint64_t> targets;    ///< h_1, ..., h_{k-1}
    std::size_t num_vars = 0;
    std::vector<std::uint64_t> forbidden;  ///< sorted, no repeats
    bool distinct = false;

    std::size_t equations() const noexcept { return k - 1; }

    bool is_forbidden(std::uint64_t a) const { return std::binary_search(forbidden.begin(), forbidden.end(), a); }

    /// Field values a coordinate may take, ascending.
    std::vector<std::uint64_t> allowed() const {
        std::vector<std::uint64_t> out;
        for (std::uint64_t a = 0; a < q; ++a)
            if (!is_forbidden(a)) out.push_back(a);
        return out;
    }

    void validate() const {
        const algebra::PrimeModulus pm(q);
        if (k < 2) throw UsageError("power-sum system needs k >= 2 (at least one equation)");
        if (k >= q) throw UsageError("power-sum system needs k < q");
        if (targets.size() != k - 1)
            throw UsageError("power-sum system: expected " + std::to_string(k - 1) + " targets, got " +
                             std::to_string(targets.size()));
        for (auto t : targets)
            if (t >= q) throw UsageError("power-sum system: target " + std::to_string(t) + " not reduced mod q");
        if (num_vars < 1) throw UsageError("power-sum system needs at least one variable");
        for (std::size_t i = 0; i < forbidden.size(); ++i) {
            if (forbidden[i] >= q) throw UsageError("forbidden value outside F_q");
            if (i > 0 && forbidden[i] <= forbidden[i - 1]) throw UsageError("forbidden values must be sorted and distinct");
        }
    }
};

/// (sum_{a in support} a^j mod q)_{j=1..k-1}.
inline std::vector<std::uint64_t> power_sum_targets(std::uint64_t q, std::size_t k,
                                                    const std::vector<std::uint64_t>& support) {
    const algebra::PrimeModulus pm(q);
    std::vector<std::uint64_t> t(k - 1, 0);
    for (auto a : support)
        for (std::size_t j = 1; j < k; ++j) t[j - 1] = pm.add(t[j - 1], pm.pow(a % q, j));
    return t;
}

/// X_{k,h,u} for the canonical center y = (1,...,1,0,...,0) of weight h.
inline PowerSumSystem system_for_prefix(std::uint64_t q, std::size_t k, std::size_t h) {
    std::vector<std::uint64_t> support;
    for (std::size_t i = 0; i < h; ++i) support.push_back(i % q);
    PowerSumSystem s{q, k, power_sum_targets(q, k, support), h, {}, false};
    s.validate();
    return s;
}

inline PowerSumSystem system_for_targets(std::uint64_t q, std::size_t k, std::vector<std::uint64_t> targets,
                                         std::size_t num_vars) {
    PowerSumSystem s{q, k, std::move(targets), num_vars, {}, false};
    s.validate();
    return s;
}

} // namespace ldrs::varieties
