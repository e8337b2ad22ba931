#pragma once

#include "ldrs/algebra/prime_field.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace ldrs::algebra {

/// Row-major dense matrix over F_q.
struct ModMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint64_t> data;

    ModMatrix() = default;
    ModMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

    std::uint64_t& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    std::uint64_t at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

struct EchelonForm {
    ModMatrix reduced;                 ///< reduced row echelon form
    std::vector<std::size_t> pivots;   ///< pivot column of each nonzero row
};

inline EchelonForm row_reduce(const PrimeModulus& q, ModMatrix m) {
    EchelonForm out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t piv = row;
        while (piv < m.rows && m.at(piv, col) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != row)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(row, j));
        const std::uint64_t inv = q.inv(m.at(row, col));
        for (std::size_t j = 0; j < m.cols; ++j) m.at(row, j) = q.mul(m.at(row, j), inv);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            const std::uint64_t f = m.at(i, col);
            for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = q.sub(m.at(i, j), q.mul(f, m.at(row, j)));
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

inline std::size_t rank(const PrimeModulus& q, const ModMatrix& m) { return row_reduce(q, m).pivots.size(); }

/// Determinant of a square matrix by Gaussian elimination.
inline std::uint64_t determinant(const PrimeModulus& q, ModMatrix m) {
    if (m.rows != m.cols) throw UsageError("determinant of a non-square matrix");
    std::uint64_t det = 1;
    for (std::size_t col = 0; col < m.cols; ++col) {
        std::size_t piv = col;
        while (piv < m.rows && m.at(piv, col) == 0) ++piv;
        if (piv == m.rows) return 0;
        if (piv != col) {
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(col, j));
            det = q.neg(det);
        }
        det = q.mul(det, m.at(col, col));
        const std::uint64_t inv = q.inv(m.at(col, col));
        for (std::size_t i = col + 1; i < m.rows; ++i) {
            const std::uint64_t f = q.mul(m.at(i, col), inv);
            if (f == 0) continue;
            for (std::size_t j = col; j < m.cols; ++j) m.at(i, j) = q.sub(m.at(i, j), q.mul(f, m.at(col, j)));
        }
    }
    return det;
}

/// Basis of {x : M x = 0} over F_q, one vector per free column, in free-column order.
inline std::vector<std::vector<std::uint64_t>> kernel_basis(const PrimeModulus& q, const ModMatrix& m) {
    const EchelonForm ef = row_reduce(q, m);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto p : ef.pivots) is_pivot[p] = true;
    std::vector<std::vector<std::uint64_t>> basis;
    for (std::size_t free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::uint64_t> v(m.cols, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < ef.pivots.size(); ++r) v[ef.pivots[r]] = q.neg(ef.reduced.at(r, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Some x with M x = b, or nullopt when inconsistent.
inline std::optional<std::vector<std::uint64_t>> solve(const PrimeModulus& q, const ModMatrix& m,
                                                       const std::vector<std::uint64_t>& b) {
    if (b.size() != m.rows) throw UsageError("solve: right-hand side length mismatch");
    ModMatrix aug(m.rows, m.cols + 1);
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i] % q.value();
    }
    const EchelonForm ef = row_reduce(q, aug);
    std::vector<std::uint64_t> x(m.cols, 0);
    for (std::size_t r = 0; r < ef.pivots.size(); ++r) {
        if (ef.pivots[r] == m.cols) return std::nullopt;
        x[ef.pivots[r]] = ef.reduced.at(r, m.cols);
    }
    return x;
}

/// Matrix with entry (j, i) = nodes[i]^j for j < rows, using 0^0 = 1.
inline ModMatrix power_matrix(const PrimeModulus& q, const std::vector<std::uint64_t>& nodes, std::size_t rows) {
    ModMatrix m(rows, nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = 0; j < rows; ++j) m.at(j, i) = q.pow(nodes[i] % q.value(), j);
    return m;
}

/// prod_{i<j} (x_j - x_i).
inline std::uint64_t vandermonde_product(const PrimeModulus& q, const std::vector<std::uint64_t>& nodes) {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j) out = q.mul(out, q.sub(nodes[j] % q, nodes[i] % q));
    return out;
}

} // namespace ldrs::algebra
