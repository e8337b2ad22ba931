#pragma once

// Verification of both clauses of the locally-dense definition for an explicit gadget.

#include "ldrs/budget.hpp"
#include "ldrs/gadget/params.hpp"
#include "ldrs/gadget/s2.hpp"
#include "ldrs/lattice/min_distance.hpp"
#include "ldrs/lattice/rs_lattice.hpp"
#include "ldrs/numeric.hpp"
#include "ldrs/parallel.hpp"
#include "ldrs/varieties/counting.hpp"
#include "ldrs/varieties/subsets.hpp"

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ldrs::gadget {

/// The stored basis spans L_{q,k}: columns in the kernel, determinant q^k, canonical normal form.
struct LatticeIntegrity {
    bool columns_in_kernel = false;
    bool determinant_is_q_pow_k = false;
    bool canonical_form = false;
    bool pass = false;
};

inline LatticeIntegrity check_lattice(const lattice::RSLattice& lat) {
    LatticeIntegrity li;
    li.columns_in_kernel = true;
    for (const auto& c : lat.basis().columns())
        if (!lat.contains(c)) li.columns_in_kernel = false;
    li.determinant_is_q_pow_k = lat.determinant() == ipow(lat.q(), static_cast<unsigned>(lat.k()));
    li.canonical_form = lat.basis() == lattice::build_lattice(lat.q(), lat.k()).basis();
    li.pass = li.columns_in_kernel && li.determinant_is_q_pow_k && li.canonical_form;
    return li;
}

struct LocalDensityCertificate {
    LatticeIntegrity integrity;
    lattice::BpLemmaReport min_distance;
    std::size_t s2_size = 0;
    bool s2_complete = false;
    std::vector<std::vector<std::uint64_t>> members;
    Integer max_norm_pow_p = 0;   ///< over S_2; equals h for binary vectors
    bool norm_clause = false;     ///< every member has ||x||_p^p <= alpha^p * 2k
    Rational target_exponent = 0; ///< eps1 (1 + eps) k
    bool target_met = false;      ///< |S_2| >= q^{target_exponent}, decided exactly
    double log_ratio = 0;         ///< log_q |S_2| / target_exponent, for charts only
    bool target_asserted = false; ///< only inside the asymptotic regime
    bool pass = false;
    std::string failure;          ///< empty on success
};

inline LocalDensityCertificate verify_local_density(const lattice::RSLattice& lat, const S2Set& s2,
                                                    const GadgetParams& params, const Budget& budget = {}) {
    LocalDensityCertificate c;
    c.integrity = check_lattice(lat);
    c.min_distance = lattice::verify_bp_lemma(lat, budget);
    c.s2_size = s2.members.size();
    c.s2_complete = s2.complete;
    c.members = s2.members;
    const Rational bound = params.alpha_pow_p * params.ell;
    c.norm_clause = !s2.members.empty();
    for (const auto& m : s2.members) {
        const Integer norm = m.size();  // binary: sum |x_i|^p = weight
        if (norm > c.max_norm_pow_p) c.max_norm_pow_p = norm;
        if (Rational(norm) > bound) c.norm_clause = false;
    }
    c.target_exponent = params.epsilon1 * (1 + params.epsilon) * params.k;
    c.target_met = c.s2_size > 0 && power_at_least(Integer(c.s2_size), Rational(1), Integer(params.q), c.target_exponent);
    if (c.s2_size > 0 && c.target_exponent > 0)
        c.log_ratio = std::log(static_cast<double>(c.s2_size)) / std::log(static_cast<double>(params.q)) /
                      to_double(c.target_exponent);
    c.target_asserted = params.regime_reached;
    if (!c.integrity.pass) c.failure = "lattice basis failed the integrity check";
    else if (!c.min_distance.pass) c.failure = "short lattice vector below 2k";
    else if (s2.members.empty()) c.failure = "S2 is empty (witness: the empty set)";
    else if (!c.norm_clause) c.failure = "an S2 member exceeds alpha^p * 2k";
    else if (c.target_asserted && !c.target_met) c.failure = "|S2| below q^(eps1(1+eps)k) inside the asymptotic regime";
    c.pass = c.failure.empty();
    return c;
}

struct FiberWitness {
    std::vector<std::uint8_t> pattern;  ///< x_1..x_r
    std::size_t weight = 0;             ///< t
    Integer fiber_size = 0;             ///< |A^{-1}(pattern)| within S_2
    Integer zstar_count = 0;            ///< |Z**_x(F_q)| = (h - t)! * fiber_size
    std::optional<std::vector<std::uint64_t>> member;  ///< lexicographically first full support in the fiber
    bool witness_verified = false;
};

struct ProjectionCertificate {
    std::size_t r = 0;
    bool in_final_range = false;  ///< r < h - k
    std::vector<FiberWitness> fibers;
    Integer fiber_total = 0;
    bool partition_holds = false;  ///< fiber_total == |S_2|
    bool surjective = false;
    std::optional<std::vector<std::uint8_t>> failing_pattern;
    bool pass = false;
};

/// Pattern i in lexicographic order over {0,1}^r: x_1 is the most significant bit.
inline std::vector<std::uint8_t> pattern_at(std::uint64_t i, std::size_t r) {
    std::vector<std::uint8_t> p(r, 0);
    for (std::size_t b = 0; b < r; ++b) p[r - 1 - b] = static_cast<std::uint8_t>((i >> b) & 1u);
    return p;
}

/// One fiber: h - t distinct values outside {a_1..a_r} whose power sums complete the pattern's.
inline FiberWitness verify_fiber(const ParityCheckMatrix& hm, const BadCenter& center, std::size_t h,
                                 const std::vector<std::uint8_t>& pattern, const Budget& budget) {
    const auto& pm = hm.q();
    const std::uint64_t q = pm.value();
    const std::size_t r = pattern.size();
    FiberWitness w;
    w.pattern = pattern;
    std::vector<std::uint64_t> prefix;
    for (std::size_t i = 0; i < r; ++i)
        if (pattern[i]) prefix.push_back(i);
    w.weight = prefix.size();
    if (w.weight > h || center.u.at(0) != h % q) return w;
    const std::size_t rest = h - w.weight;
    varieties::PowerSumSystem sys;
    sys.q = q;
    sys.k = hm.k();
    sys.targets.resize(hm.k() - 1);
    for (std::size_t j = 1; j < hm.k(); ++j) {
        std::uint64_t shifted = center.u[j];
        for (auto a : prefix) shifted = pm.sub(shifted, pm.pow(a, j));
        sys.targets[j - 1] = shifted;
    }
    for (std::size_t i = 0; i < r; ++i) sys.forbidden.push_back(i);
    sys.distinct = true;
    if (rest == 0) {
        bool zero = true;
        for (auto t : sys.targets) zero = zero && t == 0;
        w.fiber_size = zero ? 1 : 0;
        w.zstar_count = w.fiber_size;
        if (zero) w.member = prefix;
    } else {
        sys.num_vars = rest;
        w.fiber_size = varieties::count_subsets(sys, budget);
        w.zstar_count = factorial(static_cast<unsigned>(rest)) * w.fiber_size;
        if (w.fiber_size > 0) {
            const varieties::SubsetSearch search(sys, budget);
            auto tail = search.first();
            if (!tail) throw VerificationError("fiber count positive but no completion reconstructed");
            std::vector<std::uint64_t> full = prefix;
            full.insert(full.end(), tail->begin(), tail->end());
            std::sort(full.begin(), full.end());
            w.member = full;
        }
    }
    if (w.member) {
        const auto x = indicator(q, *w.member);
        bool ok = lattice::syndrome(hm, x) == center.u && w.member->size() == h;
        for (std::size_t i = 0; i < r; ++i) ok = ok && (x[i] == pattern[i]);
        if (!ok) throw VerificationError("fiber witness failed the syndrome check");
        w.witness_verified = true;
    }
    return w;
}

inline ProjectionCertificate verify_projection(const ParityCheckMatrix& hm, const BadCenter& center, std::size_t h,
                                               std::size_t k, std::size_t r, const S2Set& s2, unsigned jobs = 1,
                                               const Budget& budget = {}) {
    if (r > 20) throw CapacityError("projection check enumerates 2^r patterns", r, 20);
    ProjectionCertificate c;
    c.r = r;
    c.in_final_range = r + k < h;
    const std::uint64_t patterns = 1ull << r;
    c.fibers = parallel_map(patterns, jobs,
                            [&](std::size_t i) { return verify_fiber(hm, center, h, pattern_at(i, r), budget); });
    c.surjective = true;
    for (const auto& f : c.fibers) {
        c.fiber_total += f.fiber_size;
        if (f.fiber_size == 0 && c.surjective) {
            c.surjective = false;
            c.failing_pattern = f.pattern;
        }
        if (f.member && s2.complete && !std::binary_search(s2.members.begin(), s2.members.end(), *f.member))
            throw VerificationError("fiber witness is not an S2 member");
    }
    c.partition_holds = !s2.complete || c.fiber_total == Integer(s2.members.size());
    c.pass = c.surjective && c.partition_holds;
    return c;
}

} // namespace ldrs::gadget
