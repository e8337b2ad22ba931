#pragma once

// Naive reference implementations. They share no code with the library beyond plain integers.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

inline u64 powmod(u64 a, u64 e, u64 q) {
    u64 r = 1 % q;
    a %= q;
    while (e) {
        if (e & 1) r = r * a % q;
        a = a * a % q;
        e >>= 1;
    }
    return r;
}

/// Power sums (j = 1..k-1) of a tuple mod q.
inline std::vector<u64> power_sums(const std::vector<u64>& x, u64 q, std::size_t k) {
    std::vector<u64> s(k - 1, 0);
    for (auto v : x)
        for (std::size_t j = 1; j < k; ++j) s[j - 1] = (s[j - 1] + powmod(v, j, q)) % q;
    return s;
}

/// Visits every tuple in alphabet^n.
inline void for_each_tuple(const std::vector<u64>& alphabet, std::size_t n, const std::function<void(const std::vector<u64>&)>& f) {
    std::vector<std::size_t> idx(n, 0);
    std::vector<u64> x(n, alphabet.empty() ? 0 : alphabet[0]);
    if (alphabet.empty() && n > 0) return;
    while (true) {
        for (std::size_t i = 0; i < n; ++i) x[i] = alphabet[idx[i]];
        f(x);
        std::size_t i = 0;
        while (i < n && ++idx[i] == alphabet.size()) idx[i++] = 0;
        if (i == n) return;
    }
}

struct Counts {
    u64 all = 0;        ///< N
    u64 distinct = 0;   ///< N*
    u64 diagonal = 0;   ///< tuples with x_1 = x_2
};

/// Brute-force point counts over F_q with forbidden values.
inline Counts count_tuples(u64 q, std::size_t k, const std::vector<u64>& targets, std::size_t n,
                           const std::set<u64>& forbidden = {}) {
    std::vector<u64> alphabet;
    for (u64 a = 0; a < q; ++a)
        if (!forbidden.count(a)) alphabet.push_back(a);
    Counts c;
    for_each_tuple(alphabet, n, [&](const std::vector<u64>& x) {
        if (power_sums(x, q, k) != targets) return;
        ++c.all;
        if (std::set<u64>(x.begin(), x.end()).size() == x.size()) ++c.distinct;
        if (n >= 2 && x[0] == x[1]) ++c.diagonal;
    });
    return c;
}

/// Every m-subset (sorted) of `pool` with the given power sums, in lexicographic order.
inline std::vector<std::vector<u64>> subsets_with_sums(u64 q, std::size_t k, const std::vector<u64>& targets,
                                                       std::size_t m, const std::vector<u64>& pool) {
    std::vector<std::vector<u64>> out;
    if (m > pool.size()) return out;
    std::vector<std::size_t> pick(m);
    for (std::size_t i = 0; i < m; ++i) pick[i] = i;
    while (true) {
        std::vector<u64> s;
        for (auto i : pick) s.push_back(pool[i]);
        if (power_sums(s, q, k) == targets) out.push_back(s);
        std::size_t i = m;
        while (i > 0 && pick[i - 1] == pool.size() - m + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < m; ++j) pick[j] = pick[j - 1] + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<u64> range(u64 lo, u64 hi) {
    std::vector<u64> v;
    for (u64 a = lo; a < hi; ++a) v.push_back(a);
    return v;
}

/// Smallest l1 norm of a nonzero integer vector in Z^q with H_q(k) x = 0 mod q and ||x||_1 <= cap,
/// by direct enumeration of Z^q vectors; 0 when none exists.
inline u64 min_l1_bruteforce(u64 q, std::size_t k, u64 cap) {
    u64 best = 0;
    std::vector<std::int64_t> x(q, 0);
    std::function<void(std::size_t, u64)> rec = [&](std::size_t i, u64 budget) {
        if (i == q) {
            u64 l1 = 0;
            for (auto v : x) l1 += static_cast<u64>(v < 0 ? -v : v);
            if (l1 == 0) return;
            for (std::size_t j = 0; j < k; ++j) {
                std::int64_t s = 0;
                for (u64 a = 0; a < q; ++a) s += x[a] * static_cast<std::int64_t>(j == 0 ? 1 : powmod(a, j, q));
                if (((s % static_cast<std::int64_t>(q)) + static_cast<std::int64_t>(q)) % static_cast<std::int64_t>(q) != 0) return;
            }
            if (best == 0 || l1 < best) best = l1;
            return;
        }
        for (std::int64_t v = -static_cast<std::int64_t>(budget); v <= static_cast<std::int64_t>(budget); ++v) {
            x[i] = v;
            rec(i + 1, budget - static_cast<u64>(v < 0 ? -v : v));
        }
        x[i] = 0;
    };
    rec(0, cap);
    return best;
}

/// Coefficients (low to high) of prod (t - a) mod q.
inline std::vector<u64> poly_from_roots(const std::vector<u64>& roots, u64 q) {
    std::vector<u64> c{1};
    for (auto r : roots) {
        std::vector<u64> n(c.size() + 1, 0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            n[i + 1] = (n[i + 1] + c[i]) % q;
            n[i] = (n[i] + (q - r % q) * c[i]) % q;
        }
        c = n;
    }
    return c;
}

inline u64 eval(const std::vector<u64>& c, u64 x, u64 q) {
    u64 v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = (v * x + c[i]) % q;
    return v;
}

/// Codewords of RS_q(dim) (polys of degree < dim) agreeing with v in >= h positions.
inline u64 close_codewords(const std::vector<u64>& v, u64 q, std::size_t dim, std::size_t h) {
    u64 count = 0;
    for_each_tuple(range(0, q), dim, [&](const std::vector<u64>& c) {
        std::size_t agree = 0;
        for (u64 a = 0; a < q; ++a) agree += eval(c, a, q) == v[a];
        if (agree >= h) ++count;
    });
    return count;
}

/// Multiplication in F_q[t]/(f) for monic f of degree e, elements as coefficient vectors.
inline std::vector<u64> ext_mul(const std::vector<u64>& a, const std::vector<u64>& b, const std::vector<u64>& f, u64 q) {
    const std::size_t e = f.size() - 1;
    std::vector<u64> prod(2 * e, 0);
    for (std::size_t i = 0; i < e; ++i)
        for (std::size_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % q;
    for (std::size_t d = prod.size(); d-- > e;) {
        const u64 c = prod[d];
        if (!c) continue;
        for (std::size_t i = 0; i <= e; ++i) prod[d - e + i] = (prod[d - e + i] + q - c * f[i] % q) % q;
    }
    prod.resize(e);
    return prod;
}

} // namespace oracle
