#pragma once

#include "ldrs/errors.hpp"
#include "ldrs/numeric.hpp"

#include <cstdint>
#include <algorithm>
#include <numeric>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

namespace ldrs::lattice {

using Column = std::vector<std::int64_t>;

/// Square integer basis stored by columns: the lattice is every integer combination of them.
class LatticeBasis {
public:
    LatticeBasis() = default;
    explicit LatticeBasis(std::vector<Column> columns) : cols_(std::move(columns)) {
        for (const auto& c : cols_)
            if (c.size() != cols_.size()) throw UsageError("lattice basis must be square");
        if (!cols_.empty() && determinant() == 0) throw UsageError("lattice basis columns are dependent");
    }

    std::size_t dimension() const noexcept { return cols_.size(); }
    const std::vector<Column>& columns() const noexcept { return cols_; }
    std::int64_t entry(std::size_t row, std::size_t col) const { return cols_[col][row]; }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    Integer determinant() const {
        const std::size_t n = cols_.size();
        if (n == 0) return 1;
        std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m[i][j] = cols_[j][i];
        Integer prev = 1;
        int sign = 1;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (m[k][k] == 0) {
                std::size_t swap_row = k + 1;
                while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
                if (swap_row == n) return 0;
                std::swap(m[k], m[swap_row]);
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n; ++i) {
                for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
                m[i][k] = 0;
            }
            prev = m[k][k];
        }
        return sign * m[n - 1][n - 1];
    }

    bool is_lower_triangular() const noexcept {
        for (std::size_t j = 0; j < cols_.size(); ++j)
            for (std::size_t i = 0; i < j; ++i)
                if (cols_[j][i] != 0) return false;
        return true;
    }

    /// Integer membership by forward substitution; requires a lower-triangular basis.
    bool contains(const Column& v) const {
        if (!is_lower_triangular()) throw UsageError("membership test requires a triangular basis");
        if (v.size() != cols_.size()) throw UsageError("membership: dimension mismatch");
        std::vector<Integer> rest(v.begin(), v.end());
        for (std::size_t j = 0; j < cols_.size(); ++j) {
            const Integer d = cols_[j][j];
            if (rest[j] % d != 0) return false;
            const Integer c = rest[j] / d;
            for (std::size_t i = j; i < cols_.size(); ++i) rest[i] -= c * cols_[j][i];
        }
        return true;
    }

    friend bool operator==(const LatticeBasis& a, const LatticeBasis& b) { return a.cols_ == b.cols_; }

private:
    std::vector<Column> cols_;
};

namespace detail {

inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

/// (g, s, t) with g = s a + t b = gcd(a, b) >= 0.
inline std::tuple<std::int64_t, std::int64_t, std::int64_t> extended_gcd(std::int64_t a, std::int64_t b) {
    std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        const std::int64_t quo = old_r / r;
        old_r -= quo * r;
        std::swap(old_r, r);
        old_s -= quo * s;
        std::swap(old_s, s);
        old_t -= quo * t;
        std::swap(old_t, t);
    }
    if (old_r < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

} // namespace detail

/// Column-style Hermite normal form of span(generators) + modulus * Z^n.
///
/// The result is lower triangular with positive diagonal and 0 <= B[i][j] < B[i][i] for j < i.
/// Entries stay below the modulus throughout because modulus * e_r remains available for every
/// row not yet finalized.
inline LatticeBasis hermite_normal_form(const std::vector<Column>& generators, std::size_t n, std::int64_t modulus) {
    if (modulus <= 0 || modulus >= (std::int64_t{1} << 31)) throw UsageError("HNF modulus must lie in [1, 2^31)");
    using detail::mod_floor;
    std::vector<Column> work;
    for (const auto& g : generators) {
        if (g.size() != n) throw UsageError("HNF generator of wrong length");
        Column c(n);
        for (std::size_t i = 0; i < n; ++i) c[i] = mod_floor(g[i], modulus);
        work.push_back(std::move(c));
    }
    std::vector<Column> basis(n, Column(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t pivot = work.size();
        for (std::size_t c = 0; c < work.size(); ++c) {
            if (work[c][i] == 0) continue;
            if (pivot == work.size()) {
                pivot = c;
                continue;
            }
            auto& p = work[pivot];
            auto& o = work[c];
            const std::int64_t a = p[i], b = o[i];
            const auto [g, s, t] = detail::extended_gcd(a, b);
            for (std::size_t r = i; r < n; ++r) {
                const std::int64_t pr = p[r], orr = o[r];
                p[r] = mod_floor(s * pr + t * orr, modulus);
                o[r] = mod_floor((a / g) * orr - (b / g) * pr, modulus);
            }
            p[i] = g;
            o[i] = 0;
        }
        Column piv(n, 0);
        if (pivot == work.size()) {
            piv[i] = modulus;
        } else {
            Column p = std::move(work[pivot]);
            work.erase(work.begin() + static_cast<std::ptrdiff_t>(pivot));
            const std::int64_t a = p[i];
            const auto [g, s, t] = detail::extended_gcd(a, modulus);
            (void)t;
            Column leftover(n, 0);
            for (std::size_t r = i + 1; r < n; ++r) {
                piv[r] = mod_floor(s * p[r], modulus);
                leftover[r] = mod_floor(-(modulus / g) * p[r], modulus);
            }
            piv[i] = g;
            work.push_back(std::move(leftover));
        }
        basis[i] = std::move(piv);
        std::erase_if(work, [](const Column& c) {
            return std::all_of(c.begin(), c.end(), [](std::int64_t v) { return v == 0; });
        });
    }
    // Reduce below-diagonal entries; rows below the current one may be taken mod `modulus`.
    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            auto& col = basis[j];
            const std::int64_t d = basis[i][i];
            const std::int64_t f = (col[i] - mod_floor(col[i], d)) / d;
            if (f == 0) continue;
            for (std::size_t r = i; r < n; ++r) {
                std::int64_t v = col[r] - f * basis[i][r];
                col[r] = r == i ? v : mod_floor(v, modulus);
            }
        }
    }
    return LatticeBasis(std::move(basis));
}

} // namespace ldrs::lattice
