#pragma once

// The bad center y and the coset set S_2(y, h) of weight-h binary vectors in y + L_{q,k}.

#include "ldrs/algebra/modular_matrix.hpp"
#include "ldrs/budget.hpp"
#include "ldrs/lattice/parity_check.hpp"
#include "ldrs/varieties/counting.hpp"
#include "ldrs/varieties/subsets.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace ldrs::gadget {

using lattice::ParityCheckMatrix;

struct BadCenter {
    std::vector<std::int64_t> y;
    std::vector<std::uint64_t> u;  ///< H y mod q
    bool canonical = false;        ///< y = (1,...,1,0,...,0)
};

/// y = (1, ..., 1, 0, ..., 0) with h ones.
inline BadCenter canonical_center(const ParityCheckMatrix& hm, std::size_t h) {
    if (h > hm.columns()) throw UsageError("center weight h exceeds q");
    BadCenter c;
    c.y.assign(hm.columns(), 0);
    std::fill(c.y.begin(), c.y.begin() + static_cast<std::ptrdiff_t>(h), 1);
    c.u = lattice::syndrome(hm, c.y);
    c.canonical = true;
    return c;
}

inline BadCenter center_from_vector(const ParityCheckMatrix& hm, std::vector<std::int64_t> y) {
    BadCenter c;
    c.u = lattice::syndrome(hm, y);
    c.y = std::move(y);
    return c;
}

/// An integer center supported on the first k coordinates with syndrome u.
inline BadCenter center_from_syndrome(const ParityCheckMatrix& hm, const std::vector<std::uint64_t>& u) {
    const std::size_t k = hm.k();
    if (u.size() != k) throw UsageError("syndrome must have k entries");
    algebra::ModMatrix sub(k, k);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < k; ++i) sub.at(j, i) = hm.entry(j, i);
    std::vector<std::uint64_t> rhs;
    for (auto v : u) rhs.push_back(v % hm.q().value());
    const auto sol = algebra::solve(hm.q(), sub, rhs);
    if (!sol) throw VerificationError("Vandermonde block is singular");
    std::vector<std::int64_t> y(hm.columns(), 0);
    for (std::size_t i = 0; i < k; ++i) y[i] = static_cast<std::int64_t>((*sol)[i]);
    return center_from_vector(hm, std::move(y));
}

inline std::vector<std::int64_t> indicator(std::size_t q, const std::vector<std::uint64_t>& support) {
    std::vector<std::int64_t> x(q, 0);
    for (auto a : support) x.at(a) = 1;
    return x;
}

inline std::vector<std::uint64_t> binary_support(const std::vector<std::int64_t>& y) {
    std::vector<std::uint64_t> s;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (y[i] == 1) s.push_back(i);
        else if (y[i] != 0) return {};
    return s;
}

struct S2Set {
    std::size_t h = 0;
    std::vector<std::vector<std::uint64_t>> members;  ///< sorted supports, lexicographic order
    bool complete = false;
};

/// Every weight-h binary x with H x = u: h-subsets of F_q with power sums u_1..u_{k-1}, provided u_0 = h.
inline S2Set enumerate_s2(const ParityCheckMatrix& hm, const BadCenter& center, std::size_t h, const Budget& budget = {}) {
    const std::uint64_t q = hm.q().value();
    S2Set s;
    s.h = h;
    s.complete = true;
    if (h > q || center.u.at(0) != h % q) return s;
    varieties::PowerSumSystem sys{q, hm.k(), std::vector<std::uint64_t>(center.u.begin() + 1, center.u.end()), h, {}, true};
    if (h == 0) return s;
    const Integer expected = varieties::count_subsets(sys, budget);
    budget.require_enumeration(expected > Integer(~0ull) ? ~0ull : expected.convert_to<std::uint64_t>(), "S2 enumeration");
    const varieties::SubsetSearch search(sys, budget);
    s.members = search.enumerate(budget.max_enumeration);
    if (Integer(s.members.size()) != expected) throw VerificationError("S2 enumeration disagrees with its count");
    for (const auto& m : s.members) {
        const auto x = indicator(q, m);
        if (lattice::syndrome(hm, x) != center.u || m.size() != h)
            throw VerificationError("S2 member failed the syndrome check");
    }
    const auto own = binary_support(center.y);
    if (own.size() == h && !std::binary_search(s.members.begin(), s.members.end(), own))
        throw VerificationError("center support missing from its own coset set");
    return s;
}

inline S2Set enumerate_s2(std::uint64_t q, std::size_t k, std::size_t h, const Budget& budget = {}) {
    const auto hm = lattice::build_parity_check(q, k);
    return enumerate_s2(hm, canonical_center(hm, h), h, budget);
}

} // namespace ldrs::gadget
