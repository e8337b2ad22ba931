#pragma once

// Exact checks of the point-count estimates. Half-integer powers of Q are avoided by
// comparing squares: |N - M| <= (1/2) C Q^{s/2}  <=>  4 (N - M)^2 <= C^2 Q^s.

#include "ldrs/errors.hpp"
#include "ldrs/numeric.hpp"

#include <cstdint>

namespace ldrs::varieties {

/// N - C(h,2) Y, a lower bound for N* (may be negative).
inline Integer sieve_lower_bound(const Integer& n, const Integer& y, std::size_t h) {
    return n - binomial(static_cast<unsigned>(h), 2) * y;
}

struct BoundCheck {
    bool applicable = false;  ///< hypotheses hold for these (k, h)
    Integer main_term = 0;    ///< Q^{dim}
    Integer deviation = 0;    ///< |count - main_term|
    Integer lhs_squared = 0;  ///< 4 deviation^2
    Integer rhs_squared = 0;  ///< C^2 Q^{h-k+2}
    bool pass = false;
};

/// |N - Q^{h-k+1}| <= (1/2)(2k)^h Q^{(h-k+2)/2}, Q = q^e; stated for 2 <= k < h < q.
inline BoundCheck check_point_count_bound(const Integer& count, std::uint64_t q, unsigned e, std::size_t k,
                                          std::size_t h) {
    if (k < 2 || h < k - 1) throw UsageError("point-count bound needs k >= 2 and h >= k - 1");
    BoundCheck b;
    b.applicable = k < h && h < q;
    const Integer big_q = ipow(q, e);
    b.main_term = ipow(big_q, static_cast<unsigned>(h - k + 1));
    b.deviation = abs(count - b.main_term);
    b.lhs_squared = 4 * b.deviation * b.deviation;
    b.rhs_squared = ipow(Integer(2 * k), static_cast<unsigned>(2 * h)) * ipow(big_q, static_cast<unsigned>(h - k + 2));
    b.pass = b.lhs_squared <= b.rhs_squared;
    return b;
}

/// |Y - Q^{h-k}| <= (1/2)(2k)^{h-1} Q^{(h-k+2)/2}; stated for k <= h - 2.
inline BoundCheck check_hyperplane_bound(const Integer& y, std::uint64_t q, unsigned e, std::size_t k, std::size_t h) {
    if (k < 2 || h < k) throw UsageError("hyperplane bound needs k >= 2 and h >= k");
    BoundCheck b;
    b.applicable = k + 2 <= h && h < q;
    const Integer big_q = ipow(q, e);
    b.main_term = ipow(big_q, static_cast<unsigned>(h - k));
    b.deviation = abs(y - b.main_term);
    b.lhs_squared = 4 * b.deviation * b.deviation;
    b.rhs_squared =
        ipow(Integer(2 * k), static_cast<unsigned>(2 * (h - 1))) * ipow(big_q, static_cast<unsigned>(h - k + 2));
    b.pass = b.lhs_squared <= b.rhs_squared;
    return b;
}

struct BettiBound {
    Integer general = 0;     ///< C(n-1, r-1) (d+1)^n, d = k - 1
    Integer simplified = 0;  ///< C(h-1, k-2) k^h
    Integer half_2k_h = 0;   ///< (2k)^h / 2, exact since (2k)^h is even
    bool below_half_2k_h = false;
};

/// Total Betti bound for n ambient variables, r equations of degree at most k - 1.
inline BettiBound betti_bound(std::size_t h, std::size_t k, std::size_t ambient_vars, std::size_t codim) {
    if (codim < 1 || codim > ambient_vars) throw UsageError("betti bound needs 1 <= codim <= ambient variables");
    if (k < 2 || h < 1) throw UsageError("betti bound needs k >= 2 and h >= 1");
    BettiBound b;
    b.general = binomial(static_cast<unsigned>(ambient_vars - 1), static_cast<unsigned>(codim - 1)) *
                ipow(Integer(k), static_cast<unsigned>(ambient_vars));
    b.simplified = binomial(static_cast<unsigned>(h - 1), static_cast<unsigned>(k - 2)) * ipow(Integer(k), static_cast<unsigned>(h));
    b.half_2k_h = ipow(Integer(2 * k), static_cast<unsigned>(h)) / 2;
    b.below_half_2k_h = b.simplified < b.half_2k_h;
    return b;
}

} // namespace ldrs::varieties
