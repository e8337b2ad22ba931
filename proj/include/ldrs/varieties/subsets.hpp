#pragma once

// Enumeration of the subsets counted by count_subsets, in lexicographic order, via a
// suffix reachability table over (position, elements still to choose, residual power sums).

#include "ldrs/budget.hpp"
#include "ldrs/varieties/power_sum_system.hpp"
#include "ldrs/varieties/state_space.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace ldrs::varieties {

class SubsetSearch {
public:
    using Subset = std::vector<std::uint64_t>;

    SubsetSearch(const PowerSumSystem& sys, const Budget& budget = {})
        : field_(algebra::PrimeModulus(sys.q), 1), sp_(field_, sys.equations()), alphabet_(sys.allowed()),
          m_(sys.num_vars) {
        sys.validate();
        target_ = sp_.pack(sp_.from_targets(sys.targets));
        const std::uint64_t cells =
            saturating_mul(saturating_mul(alphabet_.size() + 1, m_ + 1), sp_.size());
        budget.require_work(cells, "subset reachability table");
        if (m_ > alphabet_.size()) return;
        bits_.assign(cells, false);
        const std::size_t n = alphabet_.size();
        set(n, 0, 0);
        for (std::size_t i = n; i-- > 0;) {
            const auto v = sp_.powers(static_cast<Element>(alphabet_[i]));
            for (std::size_t c = 0; c <= m_; ++c)
                for (std::uint64_t key = 0; key < sp_.size(); ++key) {
                    bool ok = get(i + 1, c, key);
                    if (!ok && c > 0) ok = get(i + 1, c - 1, sp_.pack(sp_.sub(sp_.unpack(key), v)));
                    if (ok) set(i, c, key);
                }
        }
    }

    bool any() const { return !bits_.empty() && get(0, m_, target_); }

    std::optional<Subset> first() const {
        std::optional<Subset> out;
        walk([&](const Subset& s) {
            out = s;
            return false;
        });
        return out;
    }

    /// All subsets in lexicographic order; more than `limit` is a capacity error.
    std::vector<Subset> enumerate(std::uint64_t limit) const {
        std::vector<Subset> out;
        walk([&](const Subset& s) {
            if (out.size() >= limit)
                throw CapacityError("subset enumeration: more members than the enumeration budget", out.size() + 1, limit);
            out.push_back(s);
            return true;
        });
        return out;
    }

private:
    std::uint64_t index(std::size_t i, std::size_t c, std::uint64_t key) const {
        return (static_cast<std::uint64_t>(i) * (m_ + 1) + c) * sp_.size() + key;
    }
    bool get(std::size_t i, std::size_t c, std::uint64_t key) const { return bits_[index(i, c, key)]; }
    void set(std::size_t i, std::size_t c, std::uint64_t key) { bits_[index(i, c, key)] = true; }

    /// Visits subsets in lexicographic order until the callback returns false.
    void walk(const std::function<bool(const Subset&)>& visit) const {
        if (!any()) return;
        Subset cur;
        std::function<bool(std::size_t, std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::size_t c,
                                                                            std::uint64_t key) -> bool {
            if (c == 0) return visit(cur);  // reachability forces key == 0 here
            const auto v = sp_.powers(static_cast<Element>(alphabet_[i]));
            const std::uint64_t rest = sp_.pack(sp_.sub(sp_.unpack(key), v));
            if (get(i + 1, c - 1, rest)) {
                cur.push_back(alphabet_[i]);
                const bool more = rec(i + 1, c - 1, rest);
                cur.pop_back();
                if (!more) return false;
            }
            if (get(i + 1, c, key)) return rec(i + 1, c, key);
            return true;
        };
        rec(0, m_, target_);
    }

    algebra::GaloisField field_;
    StateSpace sp_;
    std::vector<std::uint64_t> alphabet_;
    std::size_t m_;
    std::uint64_t target_ = 0;
    std::vector<bool> bits_;
};

} // namespace ldrs::varieties
