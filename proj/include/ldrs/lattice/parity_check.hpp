#pragma once

#include "ldrs/algebra/modular_matrix.hpp"
#include "ldrs/algebra/prime_field.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ldrs::lattice {

using algebra::PrimeModulus;

/// H_q(k): the k x q matrix with entry (j, i) = a_i^j, a_i = i (0-based), 0^0 = 1.
class ParityCheckMatrix {
public:
    ParityCheckMatrix(PrimeModulus q, std::size_t k) : q_(q), k_(k) {
        if (k <= 1 || k >= q.value())
            throw UsageError("parity check needs 1 < k < q, got q=" + std::to_string(q.value()) +
                             " k=" + std::to_string(k));
        std::vector<std::uint64_t> nodes(q.value());
        for (std::uint64_t i = 0; i < q.value(); ++i) nodes[i] = i;
        m_ = algebra::power_matrix(q, nodes, k);
    }

    const PrimeModulus& q() const noexcept { return q_; }
    std::size_t k() const noexcept { return k_; }
    std::size_t columns() const noexcept { return m_.cols; }
    std::uint64_t entry(std::size_t j, std::size_t i) const { return m_.at(j, i); }
    const algebra::ModMatrix& matrix() const noexcept { return m_; }

private:
    PrimeModulus q_;
    std::size_t k_;
    algebra::ModMatrix m_;
};

inline ParityCheckMatrix build_parity_check(std::uint64_t q, std::size_t k) {
    return ParityCheckMatrix(PrimeModulus(q), k);
}

/// u = H x mod q; vanishes exactly on lattice vectors.
inline std::vector<std::uint64_t> syndrome(const ParityCheckMatrix& h, const std::vector<std::int64_t>& x) {
    if (x.size() != h.columns())
        throw UsageError("syndrome: vector length " + std::to_string(x.size()) + " != q = " +
                         std::to_string(h.columns()));
    const auto& q = h.q();
    std::vector<std::uint64_t> u(h.k(), 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        const std::uint64_t xi = q.reduce(x[i]);
        for (std::size_t j = 0; j < h.k(); ++j) u[j] = q.add(u[j], q.mul(h.entry(j, i), xi));
    }
    return u;
}

inline bool is_zero_syndrome(const std::vector<std::uint64_t>& u) {
    for (auto v : u)
        if (v != 0) return false;
    return true;
}

} // namespace ldrs::lattice
