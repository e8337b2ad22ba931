#pragma once

#include "ldrs/algebra/galois_field.hpp"
#include "ldrs/errors.hpp"
#include "ldrs/numeric.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace ldrs::varieties {

using Element = algebra::GaloisField::Element;

/// Partial power-sum vectors (s_1, ..., s_dim) in F_Q^dim, packed base Q with s_1 least significant.
class StateSpace {
public:
    static constexpr std::size_t kMaxDim = 6;
    using Vec = std::array<Element, kMaxDim>;

    StateSpace(const algebra::GaloisField& f, std::size_t dim) : f_(&f), dim_(dim), order_(f.order()) {
        if (dim < 1 || dim > kMaxDim)
            throw CapacityError("power-sum state dimension " + std::to_string(dim) + " unsupported", dim, kMaxDim);
        size_ = saturating_pow(order_, static_cast<unsigned>(dim));
    }

    const algebra::GaloisField& field() const noexcept { return *f_; }
    std::size_t dim() const noexcept { return dim_; }
    std::uint64_t order() const noexcept { return order_; }
    /// Q^dim, saturated at 2^64 - 1.
    std::uint64_t size() const noexcept { return size_; }

    std::uint64_t pack(const Vec& v) const noexcept {
        std::uint64_t key = 0;
        for (std::size_t j = dim_; j-- > 0;) key = key * order_ + v[j];
        return key;
    }
    Vec unpack(std::uint64_t key) const noexcept {
        Vec v{};
        for (std::size_t j = 0; j < dim_; ++j) {
            v[j] = static_cast<Element>(key % order_);
            key /= order_;
        }
        return v;
    }
    Vec add(const Vec& a, const Vec& b) const noexcept {
        Vec out{};
        for (std::size_t j = 0; j < dim_; ++j) out[j] = f_->add(a[j], b[j]);
        return out;
    }
    Vec sub(const Vec& a, const Vec& b) const noexcept {
        Vec out{};
        for (std::size_t j = 0; j < dim_; ++j) out[j] = f_->sub(a[j], b[j]);
        return out;
    }
    /// (w x, w x^2, ..., w x^dim) for an integer weight w.
    Vec powers(Element x, std::uint64_t weight = 1) const noexcept {
        Vec out{};
        const Element w = f_->from_integer(static_cast<std::int64_t>(weight % f_->characteristic().value()));
        Element p = 1;
        for (std::size_t j = 0; j < dim_; ++j) {
            p = f_->mul(p, x);
            out[j] = f_->mul(w, p);
        }
        return out;
    }
    Vec from_targets(const std::vector<std::uint64_t>& targets) const {
        if (targets.size() != dim_) throw UsageError("target vector has wrong length");
        Vec v{};
        for (std::size_t j = 0; j < dim_; ++j) v[j] = f_->from_integer(static_cast<std::int64_t>(targets[j]));
        return v;
    }
    bool is_zero(const Vec& v) const noexcept {
        for (std::size_t j = 0; j < dim_; ++j)
            if (v[j] != 0) return false;
        return true;
    }

private:
    const algebra::GaloisField* f_;
    std::size_t dim_;
    std::uint64_t order_;
    std::uint64_t size_ = 0;
};

/// Counts indexed by packed state: a dense array for small spaces, a hash map otherwise.
class LevelTable {
public:
    LevelTable() = default;
    LevelTable(std::uint64_t size, bool dense) : dense_(dense) {
        if (dense_) values_.assign(size, 0);
    }

    u128 get(std::uint64_t key) const {
        if (dense_) return values_[key];
        auto it = sparse_.find(key);
        return it == sparse_.end() ? 0 : it->second;
    }
    void add(std::uint64_t key, u128 v) {
        if (dense_) values_[key] += v;
        else sparse_[key] += v;
    }
    bool dense() const noexcept { return dense_; }

    template <class F>
    void for_each(F&& f) const {
        if (dense_) {
            for (std::uint64_t i = 0; i < values_.size(); ++i)
                if (values_[i] != 0) f(i, values_[i]);
        } else {
            for (const auto& [key, v] : sparse_) f(key, v);
        }
    }

private:
    bool dense_ = true;
    std::vector<u128> values_;
    std::unordered_map<std::uint64_t, u128> sparse_;
};

/// Throws unless every count over `alphabet`^`vars` fits in an unsigned 128-bit integer.
inline void require_u128_range(std::uint64_t alphabet, std::size_t vars, const std::string& what) {
    if (alphabet <= 1) return;
    const double bits = static_cast<double>(vars) * std::log2(static_cast<double>(alphabet));
    if (bits >= 126.0)
        throw CapacityError(what + ": counts may exceed 128-bit range", static_cast<std::uint64_t>(bits), 126);
}

} // namespace ldrs::varieties
