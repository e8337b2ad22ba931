#pragma once

// Exact point counts for power-sum systems.
//
// Two engines compute c_m(S) = #{(x_1..x_m) : sum_i x_i^j = S_j, j = 1..k-1}:
//  - a plain scan over the full state space F_Q^{k-1}, one variable at a time;
//  - an orbit scan that stores c_m only on representatives of the affine group x -> a x + b.
// The affine map sends power sums to power sums (binomial expansion with s_0 = m), and it
// permutes m-tuples, so c_m is constant on orbits. Translation is used when m is a unit mod p.

#include "ldrs/algebra/galois_field.hpp"
#include "ldrs/budget.hpp"
#include "ldrs/numeric.hpp"
#include "ldrs/varieties/power_sum_system.hpp"
#include "ldrs/varieties/state_space.hpp"

#include <map>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace ldrs::varieties {

using Vec = StateSpace::Vec;

/// Level tables of the plain scan for the requested levels.
inline std::map<std::size_t, LevelTable> plain_levels(const StateSpace& sp, const std::vector<Element>& alphabet,
                                                      std::size_t max_level, const std::set<std::size_t>& keep,
                                                      const Budget& budget) {
    require_u128_range(alphabet.size(), max_level, "plain point count");
    const std::uint64_t reach = std::min(sp.size(), saturating_pow(alphabet.size(), static_cast<unsigned>(max_level)));
    budget.require_states(reach, "plain point count");
    budget.require_work(saturating_mul(saturating_mul(reach, alphabet.size()), max_level), "plain point count");
    const bool dense = sp.size() <= budget.dense_threshold;

    std::vector<Vec> steps;
    steps.reserve(alphabet.size());
    for (auto x : alphabet) steps.push_back(sp.powers(x));

    std::map<std::size_t, LevelTable> out;
    LevelTable cur(sp.size(), dense);
    cur.add(0, 1);
    if (keep.count(0)) out[0] = cur;
    for (std::size_t m = 1; m <= max_level; ++m) {
        LevelTable next(sp.size(), dense);
        cur.for_each([&](std::uint64_t key, u128 c) {
            const Vec s = sp.unpack(key);
            for (const auto& v : steps) next.add(sp.pack(sp.add(s, v)), c);
        });
        cur = std::move(next);
        if (keep.count(m)) out[m] = cur;
    }
    return out;
}

/// c_m on affine-orbit representatives, for every level m <= max_level, full alphabet F_Q.
class OrbitCounter {
public:
    OrbitCounter(const StateSpace& sp, std::size_t max_level, const Budget& budget)
        : sp_(&sp), char_(sp.field().characteristic().value()), group_(sp.order() - 1), tables_(max_level + 1) {
        require_u128_range(sp.order(), max_level, "orbit point count");
        const auto& f = sp.field();
        for (std::size_t j = 0; j <= sp.dim(); ++j)
            for (std::size_t l = 0; l <= j; ++l)
                binom_[j][l] = f.from_integer(static_cast<std::int64_t>(to_integer_mod(binomial(j, l))));
        for (std::size_t x = 0; x < sp.order(); ++x) steps_.push_back(sp.powers(static_cast<Element>(x)));

        for (std::size_t m = 1; m <= max_level; ++m) {
            const auto reps = representatives_for(m, budget);
            budget.require_work(saturating_mul(reps.size(), sp.order()), "orbit point count level");
            work_ += reps.size() * sp.order();
            budget.require_work(work_, "orbit point count");
            auto& table = tables_[m];
            for (const auto& r : reps) {
                u128 c = 0;
                for (const auto& v : steps_) c += count(m - 1, sp.sub(r, v));
                table.emplace(sp.pack(r), c);
            }
        }
    }

    std::size_t max_level() const noexcept { return tables_.size() - 1; }
    std::uint64_t representatives(std::size_t m) const { return tables_.at(m).size(); }

    /// c_m(s).
    u128 count(std::size_t m, const Vec& s) const {
        if (m == 0) return sp_->is_zero(s) ? 1 : 0;
        const auto& table = tables_.at(m);
        auto it = table.find(sp_->pack(canonical(s, m)));
        if (it == table.end()) throw VerificationError("orbit counter: canonical form missing from representative set");
        return it->second;
    }

    /// Orbit representative of s at level m (translation fixes s_1 = 0 when m is a unit).
    Vec canonical(Vec s, std::size_t m) const {
        const auto& f = sp_->field();
        if (m % char_ != 0) {
            const Element mm = f.from_integer(static_cast<std::int64_t>(m % char_));
            const Element b = f.neg(f.mul(s[0], f.inv(mm)));
            s = translate(s, m, b);
        }
        return scale_canonical(s);
    }

    /// Power sums of (x_i + b) from those of (x_i), with s_0 = m.
    Vec translate(const Vec& s, std::size_t m, Element b) const {
        const auto& f = sp_->field();
        Vec out{};
        for (std::size_t j = 1; j <= sp_->dim(); ++j) {
            Element acc = 0;
            for (std::size_t l = 0; l <= j; ++l) {
                const Element sl = l == 0 ? f.from_integer(static_cast<std::int64_t>(m % char_)) : s[l - 1];
                acc = f.add(acc, f.mul(binom_[j][l], f.mul(f.pow(b, j - l), sl)));
            }
            out[j - 1] = acc;
        }
        return out;
    }

private:
    static std::uint64_t to_integer_mod(const Integer& v) { return v.convert_to<std::uint64_t>(); }

    static std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t n) {
        std::int64_t t = 0, nt = 1;
        std::int64_t r = static_cast<std::int64_t>(n), nr = static_cast<std::int64_t>(a % n);
        while (nr != 0) {
            const std::int64_t qt = r / nr;
            std::tie(t, nt) = std::make_pair(nt, t - qt * nt);
            std::tie(r, nr) = std::make_pair(nr, r - qt * nr);
        }
        if (t < 0) t += static_cast<std::int64_t>(n);
        return static_cast<std::uint64_t>(t);
    }

    /// Lexicographically smallest packed image under s_j -> a^j s_j with the first nonzero
    /// component's discrete log reduced mod gcd(j0, Q - 1).
    Vec scale_canonical(const Vec& s) const {
        const auto& f = sp_->field();
        std::size_t j0 = 0;
        while (j0 < sp_->dim() && s[j0] == 0) ++j0;
        if (j0 == sp_->dim()) return s;
        const std::uint64_t power = j0 + 1;
        const std::uint64_t n = group_;
        const std::uint64_t L = f.log(s[j0]);
        const std::uint64_t d = std::gcd(power, n);
        const std::uint64_t rhs = ((L % d) + n - L) % n;
        const std::uint64_t np = n / d;
        const std::uint64_t t0 = np == 1 ? 0 : (rhs / d) % np * inverse_mod((power / d) % np, np) % np;
        Vec best{};
        std::uint64_t best_key = ~0ull;
        for (std::uint64_t i = 0; i < d; ++i) {
            const std::uint64_t t = t0 + i * np;
            Vec c{};
            for (std::size_t j = 0; j < sp_->dim(); ++j)
                c[j] = s[j] == 0 ? 0 : f.mul(s[j], f.exp(static_cast<std::uint64_t>((static_cast<u128>(t) * (j + 1)) % n)));
            const std::uint64_t key = sp_->pack(c);
            if (key < best_key) {
                best_key = key;
                best = c;
            }
        }
        return best;
    }

    std::vector<Vec> representatives_for(std::size_t m, const Budget& budget) const {
        const auto& f = sp_->field();
        const std::size_t dim = sp_->dim();
        const std::size_t start = (m % char_ != 0) ? 1 : 0;  // component index of the first free power
        std::uint64_t candidates = 1;
        for (std::size_t j0 = start; j0 < dim; ++j0)
            candidates += saturating_mul(std::gcd<std::uint64_t>(j0 + 1, group_),
                                         saturating_pow(sp_->order(), static_cast<unsigned>(dim - 1 - j0)));
        budget.require_states(candidates, "orbit representatives");
        std::vector<Vec> reps;
        reps.push_back(Vec{});
        for (std::size_t j0 = start; j0 < dim; ++j0) {
            const std::uint64_t d = std::gcd<std::uint64_t>(j0 + 1, group_);
            const std::uint64_t tail = saturating_pow(sp_->order(), static_cast<unsigned>(dim - 1 - j0));
            for (std::uint64_t l = 0; l < d; ++l)
                for (std::uint64_t rest = 0; rest < tail; ++rest) {
                    Vec v{};
                    v[j0] = f.exp(l);
                    std::uint64_t r = rest;
                    for (std::size_t j = j0 + 1; j < dim; ++j) {
                        v[j] = static_cast<Element>(r % sp_->order());
                        r /= sp_->order();
                    }
                    if (sp_->pack(canonical(v, m)) == sp_->pack(v)) reps.push_back(v);
                }
        }
        return reps;
    }

    const StateSpace* sp_;
    std::uint64_t char_;
    std::uint64_t group_;
    std::array<std::array<Element, StateSpace::kMaxDim + 1>, StateSpace::kMaxDim + 1> binom_{};
    std::vector<Vec> steps_;
    std::vector<std::unordered_map<std::uint64_t, u128>> tables_;
    std::uint64_t work_ = 0;
};

namespace detail {

inline void require_extension_degree(unsigned e) {
    if (e < 1 || e > 3) throw UsageError("extension degree must be 1, 2 or 3, got " + std::to_string(e));
}

inline std::vector<Element> alphabet_of(const PowerSumSystem& sys, const algebra::GaloisField& f) {
    std::vector<Element> out;
    for (std::uint64_t x = 0; x < f.order(); ++x)
        if (x >= sys.q || !sys.is_forbidden(x)) out.push_back(static_cast<Element>(x));
    return out;
}

/// Sum over the first variable's value x (weight w on x) of c_{n-w}(target - w v(x)).
template <class Lookup>
u128 pull(const StateSpace& sp, const std::vector<Element>& alphabet, const Vec& target, std::uint64_t weight,
          Lookup&& lookup) {
    u128 total = 0;
    for (auto x : alphabet) total += lookup(sp.sub(target, sp.powers(x, weight)));
    return total;
}

} // namespace detail

/// N over F_{q^e} by the plain full-state scan.
inline Integer count_points_plain(const PowerSumSystem& sys, unsigned e = 1, const Budget& budget = {}) {
    sys.validate();
    detail::require_extension_degree(e);
    if (sys.distinct) throw UsageError("plain scan counts all tuples; use count_points_distinct");
    const algebra::GaloisField f(algebra::PrimeModulus(sys.q), e);
    const StateSpace sp(f, sys.equations());
    const auto alphabet = detail::alphabet_of(sys, f);
    auto levels = plain_levels(sp, alphabet, sys.num_vars, {sys.num_vars}, budget);
    return to_integer(levels.at(sys.num_vars).get(sp.pack(sp.from_targets(sys.targets))));
}

/// N over F_{q^e} by the orbit scan; requires no forbidden values.
inline Integer count_points_orbit(const PowerSumSystem& sys, unsigned e = 1, const Budget& budget = {}) {
    sys.validate();
    detail::require_extension_degree(e);
    if (sys.distinct || !sys.forbidden.empty()) throw UsageError("orbit scan needs the full alphabet and no distinctness");
    const algebra::GaloisField f(algebra::PrimeModulus(sys.q), e);
    const StateSpace sp(f, sys.equations());
    const OrbitCounter oc(sp, sys.num_vars - 1, budget);
    const auto alphabet = detail::alphabet_of(sys, f);
    const Vec target = sp.from_targets(sys.targets);
    const std::size_t below = sys.num_vars - 1;
    return to_integer(detail::pull(sp, alphabet, target, 1, [&](const Vec& s) { return oc.count(below, s); }));
}

/// Number of (numVars)-subsets of F_q minus forbidden with the prescribed power sums.
inline Integer count_subsets(const PowerSumSystem& sys, const Budget& budget = {}) {
    sys.validate();
    const auto alphabet = sys.allowed();
    const std::size_t m = sys.num_vars;
    if (m > alphabet.size()) return 0;
    const algebra::GaloisField f(algebra::PrimeModulus(sys.q), 1);
    const StateSpace sp(f, sys.equations());
    budget.require_states(saturating_mul(sp.size(), m + 1), "distinct-coordinate count");
    budget.require_work(saturating_mul(saturating_mul(sp.size(), m), alphabet.size()), "distinct-coordinate count");
    const bool dense = saturating_mul(sp.size(), m + 1) <= budget.dense_threshold;
    // take/skip scan: dp[c] = counts over subsets of the processed prefix with c elements
    std::vector<LevelTable> dp;
    for (std::size_t c = 0; c <= m; ++c) dp.emplace_back(sp.size(), dense);
    dp[0].add(0, 1);
    std::size_t seen = 0;
    for (auto a : alphabet) {
        const Vec v = sp.powers(static_cast<Element>(a));
        ++seen;
        for (std::size_t c = std::min(m, seen); c-- > 0;) {
            std::vector<std::pair<std::uint64_t, u128>> moves;
            dp[c].for_each([&](std::uint64_t key, u128 n) { moves.emplace_back(sp.pack(sp.add(sp.unpack(key), v)), n); });
            for (const auto& [key, n] : moves) dp[c + 1].add(key, n);
        }
    }
    return to_integer(dp[m].get(sp.pack(sp.from_targets(sys.targets))));
}

/// N* = numVars! times the number of admissible subsets.
inline Integer count_points_distinct(const PowerSumSystem& sys, const Budget& budget = {}) {
    return factorial(static_cast<unsigned>(sys.num_vars)) * count_subsets(sys, budget);
}

/// N over F_{q^e}. Distinctness dispatches to the take/skip scan (e = 1 only).
inline Integer count_points(const PowerSumSystem& sys, const Budget& budget = {}, unsigned e = 1) {
    if (sys.distinct) {
        if (e != 1) throw UsageError("distinct-coordinate counts are over F_q only");
        return count_points_distinct(sys, budget);
    }
    if (sys.forbidden.empty()) return count_points_orbit(sys, e, budget);
    return count_points_plain(sys, e, budget);
}

inline Integer count_extension(const PowerSumSystem& sys, unsigned e, const Budget& budget = {}) {
    detail::require_extension_degree(e);
    return count_points(sys, budget, e);
}

/// |Y_{k,h,u}|: tuples of X_{k,h,u} with x_1 = x_2 (a doubled variable plus numVars - 2 free ones).
inline Integer count_hyperplane_section(const PowerSumSystem& sys, unsigned e = 1, const Budget& budget = {}) {
    sys.validate();
    detail::require_extension_degree(e);
    if (sys.distinct) throw UsageError("hyperplane section is defined on the all-tuples variety");
    if (sys.num_vars < 2) return 0;
    const algebra::GaloisField f(algebra::PrimeModulus(sys.q), e);
    const StateSpace sp(f, sys.equations());
    const auto alphabet = detail::alphabet_of(sys, f);
    const Vec target = sp.from_targets(sys.targets);
    const std::size_t below = sys.num_vars - 2;
    if (sys.forbidden.empty()) {
        const OrbitCounter oc(sp, below, budget);
        return to_integer(detail::pull(sp, alphabet, target, 2, [&](const Vec& s) { return oc.count(below, s); }));
    }
    auto levels = plain_levels(sp, alphabet, below, {below}, budget);
    const auto& table = levels.at(below);
    return to_integer(detail::pull(sp, alphabet, target, 2, [&](const Vec& s) { return table.get(sp.pack(s)); }));
}

} // namespace ldrs::varieties
