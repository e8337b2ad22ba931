#pragma once

// Exhaustive short-vector search on L_{q,k} over signed multisets (T+, T-) of field elements.
//
// A lattice vector x with ||x||_1 = m corresponds to disjoint multisets T+ (positive entries,
// with multiplicity) and T- (negative entries) with |T+| + |T-| = m, |T+| = |T-| mod q, and
// equal power sums p_1..p_{k-1}. Halves are indexed by size and joined on the power-sum key.

#include "ldrs/algebra/newton.hpp"
#include "ldrs/budget.hpp"
#include "ldrs/lattice/rs_lattice.hpp"
#include "ldrs/numeric.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ldrs::lattice {

struct ShortVector {
    std::vector<std::uint64_t> plus;   ///< sorted multiset T+
    std::vector<std::uint64_t> minus;  ///< sorted multiset T-
    Column vector;
    std::uint64_t l1 = 0;
    Integer norm_pow_p = 0;  ///< sum |x_i|^p
};

struct MinDistanceResult {
    unsigned p = 1;
    std::uint64_t radius_cap = 0;
    bool found = false;
    Integer value_pow_p = 0;        ///< smallest sum |x_i|^p among vectors with l1 <= radius_cap
    bool exact = false;             ///< value_pow_p equals lambda^(p)^p
    Integer lower_bound_pow_p = 0;  ///< certified lambda^(p)^p >= this
    std::optional<ShortVector> witness;
    std::vector<ShortVector> all_found;  ///< populated only when collecting
    std::uint64_t total_found = 0;
    std::uint64_t multisets_enumerated = 0;
};

namespace detail {

/// Every multiset of size s over F_q (non-decreasing sequences) with its packed power-sum key.
struct MultisetTable {
    std::size_t size = 0;
    std::vector<std::uint8_t> elements;  // flattened, `size` entries per multiset
    std::multimap<std::uint64_t, std::size_t> by_key;

    std::vector<std::uint64_t> get(std::size_t id) const {
        std::vector<std::uint64_t> out(size);
        for (std::size_t i = 0; i < size; ++i) out[i] = elements[id * size + i];
        return out;
    }
};

inline std::uint64_t multiset_count(std::uint64_t q, std::size_t s) {
    // C(q + s - 1, s), saturating
    long double acc = 1;
    for (std::size_t i = 1; i <= s; ++i) acc = acc * static_cast<long double>(q - 1 + i) / static_cast<long double>(i);
    if (acc > 1.8e19L) return ~0ull;
    return static_cast<std::uint64_t>(acc + 0.5L);
}

inline MultisetTable build_multisets(const ParityCheckMatrix& h, std::size_t s) {
    const auto& q = h.q();
    const std::size_t k = h.k();
    MultisetTable t;
    t.size = s;
    std::vector<std::uint64_t> seq(s, 0);
    std::size_t id = 0;
    while (true) {
        std::uint64_t key = 0;
        for (std::size_t j = k - 1; j >= 1; --j) {
            std::uint64_t pj = 0;
            for (auto x : seq) pj = q.add(pj, h.entry(j, x));
            key = key * q.value() + pj;
        }
        for (auto x : seq) t.elements.push_back(static_cast<std::uint8_t>(x));
        t.by_key.emplace(key, id++);
        // next non-decreasing sequence
        std::size_t pos = s;
        while (pos > 0 && seq[pos - 1] == q.value() - 1) --pos;
        if (pos == 0) break;
        const std::uint64_t v = seq[pos - 1] + 1;
        for (std::size_t i = pos - 1; i < s; ++i) seq[i] = v;
    }
    return t;
}

inline bool disjoint(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        if (a[i] < b[j]) ++i;
        else ++j;
    }
    return true;
}

} // namespace detail

/// Minimum l_p norm (p a positive integer) over nonzero lattice vectors with l1 norm <= radius_cap.
///
/// When nothing is found the result certifies lambda^(p)^p >= radius_cap + 1, because
/// sum |x_i|^p >= sum |x_i| for integer vectors. Set `collect` to keep every vector found
/// (up to the enumeration budget); otherwise the scan stops once no larger l1 can improve.
inline MinDistanceResult min_distance_bruteforce(const RSLattice& lat, unsigned p, std::uint64_t radius_cap,
                                                 const Budget& budget = {}, bool collect = false) {
    if (p < 1) throw UsageError("norm index p must be >= 1");
    const auto& h = lat.parity_check();
    const std::uint64_t q = lat.q();
    if (q > 255) throw UsageError("short-vector search supports q <= 255");

    // (a, b) = (|T+|, |T-|) with a >= b, a + b <= R, a = b mod q, a >= 1.
    std::vector<std::pair<std::size_t, std::size_t>> splits;
    std::vector<bool> need(radius_cap + 1, false);
    for (std::uint64_t m = 1; m <= radius_cap; ++m)
        for (std::uint64_t b = 0; 2 * b <= m; ++b) {
            const std::uint64_t a = m - b;
            if ((a - b) % q != 0) continue;
            splits.emplace_back(a, b);
            need[a] = need[b] = true;
        }
    std::uint64_t total = 0;
    for (std::size_t s = 0; s <= radius_cap; ++s)
        if (need[s]) {
            const std::uint64_t c = detail::multiset_count(q, s);
            total = (c > ~0ull - total) ? ~0ull : total + c;
        }
    budget.require_enumeration(total, "signed multiset search");

    std::map<std::size_t, detail::MultisetTable> tables;
    for (std::size_t s = 0; s <= radius_cap; ++s)
        if (need[s]) tables.emplace(s, detail::build_multisets(h, s));

    MinDistanceResult res;
    res.p = p;
    res.radius_cap = radius_cap;
    res.multisets_enumerated = total;

    for (const auto& [a, b] : splits) {
        const std::uint64_t m = a + b;
        if (!collect && res.found && Integer(m) > res.value_pow_p) break;
        const auto& ta = tables.at(a);
        const auto& tb = tables.at(b);
        for (const auto& [key, id_minus] : tb.by_key) {
            auto range = ta.by_key.equal_range(key);
            for (auto it = range.first; it != range.second; ++it) {
                ShortVector sv;
                sv.plus = ta.get(it->second);
                sv.minus = tb.get(id_minus);
                if (!detail::disjoint(sv.plus, sv.minus)) continue;
                sv.vector.assign(q, 0);
                for (auto x : sv.plus) ++sv.vector[x];
                for (auto x : sv.minus) --sv.vector[x];
                sv.l1 = m;
                for (auto v : sv.vector) sv.norm_pow_p += ipow(Integer(v < 0 ? -v : v), p);
                if (!lat.contains(sv.vector)) throw VerificationError("short-vector search produced a non-lattice vector");
                ++res.total_found;
                if (!res.found || sv.norm_pow_p < res.value_pow_p) {
                    res.found = true;
                    res.value_pow_p = sv.norm_pow_p;
                    res.witness = sv;
                }
                if (collect) {
                    budget.require_enumeration(res.all_found.size() + 1, "collected short vectors");
                    res.all_found.push_back(std::move(sv));
                }
            }
        }
    }
    const Integer beyond = Integer(radius_cap) + 1;
    res.exact = res.found && res.value_pow_p <= beyond;
    res.lower_bound_pow_p = res.exact ? res.value_pow_p : beyond;
    return res;
}

struct BpLemmaWitness {
    ShortVector vector;
    bool elementary_equal = false;  ///< e_1..e_{m/2} of T+ and T- agree
};

/// Outcome of checking that no nonzero lattice vector has l1 norm below 2k.
struct BpLemmaReport {
    std::uint64_t q = 0;
    std::size_t k = 0;
    std::uint64_t radius = 0;  ///< 2k - 1
    bool pass = false;
    std::vector<BpLemmaWitness> witnesses;
    std::uint64_t multisets_checked = 0;
    /// Number of multisets of size < k whose power sums p_1..p_{k-1} were shown to determine them.
    std::uint64_t newton_unique_multisets = 0;
    bool newton_uniqueness = false;
};

/// Searches all signed multisets of total size < 2k and replays the Newton argument:
/// equal power sums p_1..p_{k-1} on two multisets of size < k force equal elementary
/// symmetric functions, hence equal multisets.
inline BpLemmaReport verify_bp_lemma(const RSLattice& lat, const Budget& budget = {}) {
    const std::uint64_t q = lat.q();
    const std::size_t k = lat.k();
    if (2 * k > q) throw UsageError("minimum-distance lemma needs k <= q/2");
    BpLemmaReport rep;
    rep.q = q;
    rep.k = k;
    rep.radius = 2 * k - 1;
    const auto search = min_distance_bruteforce(lat, 1, rep.radius, budget, true);
    rep.multisets_checked = search.multisets_enumerated;
    const algebra::PrimeModulus pm(q);
    for (const auto& sv : search.all_found) {
        BpLemmaWitness w{sv, false};
        if (sv.plus.size() == sv.minus.size() && sv.plus.size() < q) {
            const std::size_t s = sv.plus.size();
            const auto ep = algebra::power_sums_to_elementary(algebra::power_sums_of(pm, sv.plus, s), s);
            const auto em = algebra::power_sums_to_elementary(algebra::power_sums_of(pm, sv.minus, s), s);
            w.elementary_equal = ep == em;
        }
        rep.witnesses.push_back(std::move(w));
    }
    // Uniqueness: every multiset of size s < k is the only one with its power-sum key.
    bool unique = true;
    std::uint64_t checked = 0;
    for (std::size_t s = 1; s < k; ++s) {
        const auto table = detail::build_multisets(lat.parity_check(), s);
        for (auto it = table.by_key.begin(); it != table.by_key.end(); ++it) {
            ++checked;
            if (table.by_key.count(it->first) != 1) unique = false;
        }
    }
    rep.newton_unique_multisets = checked;
    rep.newton_uniqueness = unique;
    rep.pass = rep.witnesses.empty() && unique;
    return rep;
}

} // namespace ldrs::lattice
