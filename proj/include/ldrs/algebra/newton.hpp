#pragma once

// Newton's identities between power sums p_j and elementary symmetric functions e_j over F_q.

#include "ldrs/algebra/prime_field.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ldrs::algebra {

namespace detail {

inline PrimeModulus common_modulus(const std::vector<FieldElement>& v, const char* what) {
    if (v.empty()) throw UsageError(std::string(what) + ": empty input");
    for (const auto& x : v)
        if (x.modulus() != v.front().modulus()) throw UsageError(std::string(what) + ": modulus mismatch");
    return v.front().modulus();
}

} // namespace detail

/// (e_1..e_m) from (p_1..p_m): j*e_j = sum_{i=1}^{j} (-1)^{i-1} e_{j-i} p_i. Needs m < q.
inline std::vector<FieldElement> power_sums_to_elementary(const std::vector<FieldElement>& p, std::size_t m) {
    if (m == 0) return {};
    const PrimeModulus q = detail::common_modulus(p, "power_sums_to_elementary");
    if (p.size() < m) throw UsageError("power_sums_to_elementary: need at least m power sums");
    if (m >= q.value())
        throw DomainError("power_sums_to_elementary: m = " + std::to_string(m) +
                          " >= characteristic " + std::to_string(q.value()));
    std::vector<FieldElement> e;
    e.reserve(m + 1);
    e.emplace_back(1, q);
    for (std::size_t j = 1; j <= m; ++j) {
        FieldElement acc(0, q);
        for (std::size_t i = 1; i <= j; ++i) {
            const FieldElement term = e[j - i] * p[i - 1];
            acc = (i % 2 == 1) ? acc + term : acc - term;
        }
        e.push_back(acc * FieldElement(j, q).inv());
    }
    e.erase(e.begin());
    return e;
}

/// (p_1..p_m) from (e_1..e_n), e_j = 0 beyond n. Division-free, valid in any characteristic:
/// p_j = sum_{i=1}^{j-1} (-1)^{i-1} e_i p_{j-i} + (-1)^{j-1} j e_j.
inline std::vector<FieldElement> elementary_to_power_sums(const std::vector<FieldElement>& e, std::size_t m) {
    if (m == 0) return {};
    const PrimeModulus q = detail::common_modulus(e, "elementary_to_power_sums");
    auto e_at = [&](std::size_t j) { return j <= e.size() ? e[j - 1] : FieldElement(0, q); };
    std::vector<FieldElement> p;
    p.reserve(m);
    for (std::size_t j = 1; j <= m; ++j) {
        FieldElement acc(0, q);
        for (std::size_t i = 1; i < j; ++i) {
            const FieldElement term = e_at(i) * p[j - i - 1];
            acc = (i % 2 == 1) ? acc + term : acc - term;
        }
        const FieldElement last = FieldElement(j, q) * e_at(j);
        acc = (j % 2 == 1) ? acc + last : acc - last;
        p.push_back(acc);
    }
    return p;
}

/// p_j = sum_x x^j for j = 1..m over a multiset of field values.
inline std::vector<FieldElement> power_sums_of(const PrimeModulus& q, const std::vector<std::uint64_t>& multiset,
                                               std::size_t m) {
    std::vector<FieldElement> out;
    out.reserve(m);
    for (std::size_t j = 1; j <= m; ++j) {
        std::uint64_t acc = 0;
        for (auto x : multiset) acc = q.add(acc, q.pow(x % q.value(), j));
        out.emplace_back(acc, q);
    }
    return out;
}

/// e_j of a multiset, by expanding prod (1 + x t).
inline std::vector<FieldElement> elementary_of(const PrimeModulus& q, const std::vector<std::uint64_t>& multiset) {
    std::vector<std::uint64_t> c{1};
    for (auto x : multiset) {
        c.push_back(0);
        for (std::size_t i = c.size() - 1; i >= 1; --i) c[i] = q.add(c[i], q.mul(c[i - 1], x % q.value()));
    }
    std::vector<FieldElement> out;
    for (std::size_t i = 1; i < c.size(); ++i) out.emplace_back(c[i], q);
    return out;
}

} // namespace ldrs::algebra
