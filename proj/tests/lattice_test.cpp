#include "ldrs/lattice.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

using namespace ldrs;
using namespace ldrs::lattice;

namespace {

std::vector<std::uint64_t> row(const ParityCheckMatrix& h, std::size_t j) {
    std::vector<std::uint64_t> r;
    for (std::size_t i = 0; i < h.columns(); ++i) r.push_back(h.entry(j, i));
    return r;
}

/// Two disjoint m-subsets of F_q with equal p_1..p_{k-1}: a +-1 vector of l1 norm 2m in the lattice.
bool disjoint_pair_exists(std::uint64_t q, std::size_t k, std::size_t m) {
    const auto all = oracle::subsets_with_sums(q, 1, {}, m, oracle::range(0, q));
    for (std::size_t a = 0; a < all.size(); ++a)
        for (std::size_t b = a + 1; b < all.size(); ++b) {
            bool overlap = false;
            for (auto x : all[a])
                if (std::count(all[b].begin(), all[b].end(), x)) overlap = true;
            if (!overlap && oracle::power_sums(all[a], q, k) == oracle::power_sums(all[b], q, k)) return true;
        }
    return false;
}

} // namespace

TEST(ParityCheck, Examples) {
    const auto h52 = build_parity_check(5, 2);
    EXPECT_EQ(row(h52, 0), (std::vector<std::uint64_t>{1, 1, 1, 1, 1}));
    EXPECT_EQ(row(h52, 1), (std::vector<std::uint64_t>{0, 1, 2, 3, 4}));
    EXPECT_EQ(row(build_parity_check(5, 3), 2), (std::vector<std::uint64_t>{0, 1, 4, 4, 1}));
    EXPECT_EQ(build_parity_check(7, 2).entry(1, 6), 6u);
}

TEST(ParityCheck, Preconditions) {
    EXPECT_THROW(build_parity_check(7, 1), UsageError);
    EXPECT_THROW(build_parity_check(7, 7), UsageError);
    EXPECT_THROW(build_parity_check(9, 2), UsageError);
}

TEST(ParityCheck, EntriesArePowers) {
    for (std::uint64_t q : {5u, 7u, 11u, 13u}) {
        const auto h = build_parity_check(q, 4);
        for (std::size_t j = 0; j < 4; ++j)
            for (std::uint64_t i = 0; i < q; ++i) EXPECT_EQ(h.entry(j, i), oracle::powmod(i, j, q));
    }
}

TEST(Lattice, DeterminantLaw) {
    EXPECT_EQ(build_lattice(5, 2).determinant(), 25);
    EXPECT_EQ(build_lattice(7, 3).determinant(), 343);
    for (std::uint64_t q : {5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u})
        for (std::size_t k = 2; k <= std::min<std::size_t>(6, q - 1); ++k) {
            const auto lat = build_lattice(q, k);
            EXPECT_EQ(lat.determinant(), ipow(q, static_cast<unsigned>(k))) << q << "," << k;
            EXPECT_EQ(lat.dimension(), q);
            EXPECT_TRUE(lat.basis().is_lower_triangular());
        }
}

TEST(Lattice, MembershipAndKernel) {
    for (std::uint64_t q : {5u, 7u, 11u}) {
        for (std::size_t k = 2; k < q; ++k) {
            const auto lat = build_lattice(q, k);
            for (const auto& c : lat.basis().columns()) EXPECT_TRUE(is_zero_syndrome(syndrome(lat.parity_check(), c)));
            for (std::size_t i = 0; i < q; ++i) {
                Column e(q, 0);
                e[i] = static_cast<std::int64_t>(q);
                EXPECT_TRUE(lat.basis().contains(e));
                EXPECT_TRUE(lat.contains(e));
                e[i] = 1;
                EXPECT_FALSE(lat.basis().contains(e));
            }
        }
    }
    const auto lat = build_lattice(7, 3);
    Column x(7, 0);
    x[0] = 7;
    EXPECT_TRUE(lat.contains(x));
}

TEST(Lattice, SpanMatchesKernelExactly) {
    // A vector is in the span iff its syndrome vanishes; compare on every vector of a small box.
    const auto lat = build_lattice(5, 2);
    oracle::for_each_tuple({0, 1, 2, 3, 4}, 5, [&](const std::vector<std::uint64_t>& v) {
        Column c(v.begin(), v.end());
        ASSERT_EQ(lat.basis().contains(c), lat.contains(c));
    });
}

TEST(Lattice, NormalFormIsStableUnderAddingQIdentity) {
    for (std::uint64_t q : {7u, 11u, 13u})
        for (std::size_t k = 2; k <= 4; ++k) {
            const auto lat = build_lattice(q, k);
            const auto again = hermite_normal_form(lat.basis().columns(), q, static_cast<std::int64_t>(q));
            EXPECT_EQ(again.columns(), lat.basis().columns());
            std::vector<Column> with_q(lat.basis().columns());
            for (std::size_t i = 0; i < q; ++i) {
                Column e(q, 0);
                e[i] = static_cast<std::int64_t>(q);
                with_q.push_back(e);
            }
            EXPECT_EQ(hermite_normal_form(with_q, q, static_cast<std::int64_t>(q)).columns(), lat.basis().columns());
        }
}

TEST(Lattice, TextRoundTrip) {
    const auto lat = build_lattice(7, 3);
    const auto text = lattice_text(lat);
    EXPECT_EQ(text.substr(0, text.find('\n')), "7 3 7 343");
    std::istringstream in(text);
    const auto back = read_lattice(in);
    EXPECT_EQ(back.basis().columns(), lat.basis().columns());
    EXPECT_EQ(lattice_text(back), text);

    std::string bad = text;
    bad.replace(0, bad.find('\n'), "7 3 7 344");
    std::istringstream in2(bad);
    EXPECT_THROW(read_lattice(in2), VerificationError);
}

TEST(Syndrome, Examples) {
    const auto h = build_parity_check(7, 3);
    EXPECT_EQ(syndrome(h, Column(7, 0)), (std::vector<std::uint64_t>{0, 0, 0}));
    EXPECT_EQ(syndrome(h, {1, 1, 1, 0, 0, 0, 0}), (std::vector<std::uint64_t>{3, 3, 5}));
    EXPECT_THROW(syndrome(h, Column(6, 0)), UsageError);
    EXPECT_EQ(syndrome(h, {-1, 0, 0, 0, 0, 0, 0}), (std::vector<std::uint64_t>{6, 0, 0}));
}

TEST(MinDistance, Examples) {
    const auto l73 = build_lattice(7, 3);
    const auto r5 = min_distance_bruteforce(l73, 1, 5);
    EXPECT_FALSE(r5.found);
    EXPECT_EQ(r5.lower_bound_pow_p, 6);

    const auto r6 = min_distance_bruteforce(l73, 1, 6);
    EXPECT_EQ(r6.found, disjoint_pair_exists(7, 3, 3));
    ASSERT_TRUE(r6.found);
    EXPECT_TRUE(r6.exact);
    EXPECT_EQ(r6.value_pow_p, 6);
    ASSERT_TRUE(r6.witness.has_value());
    EXPECT_TRUE(l73.contains(r6.witness->vector));

    const auto l52 = build_lattice(5, 2);
    const auto r = min_distance_bruteforce(l52, 1, 4);
    EXPECT_TRUE(r.exact);
    EXPECT_EQ(r.value_pow_p, 4);
    EXPECT_EQ(oracle::min_l1_bruteforce(5, 2, 4), 4u);
}

TEST(MinDistance, AgreesWithRawVectorEnumeration) {
    struct Case { std::uint64_t q; std::size_t k; std::uint64_t cap; };
    for (const auto c : {Case{5, 2, 5}, Case{5, 3, 5}, Case{7, 2, 5}, Case{7, 3, 6}, Case{7, 4, 6}}) {
        const auto lat = build_lattice(c.q, c.k);
        const auto got = min_distance_bruteforce(lat, 1, c.cap);
        const auto want = oracle::min_l1_bruteforce(c.q, c.k, c.cap);
        EXPECT_EQ(got.found, want != 0) << c.q << "," << c.k;
        if (want != 0) {
            EXPECT_EQ(got.value_pow_p, want) << c.q << "," << c.k;
        }
    }
}

TEST(MinDistance, HigherNormsDominateL1) {
    const auto lat = build_lattice(7, 3);
    for (unsigned p : {1u, 2u, 3u}) {
        const auto r = min_distance_bruteforce(lat, p, 7, {}, true);
        ASSERT_TRUE(r.found);
        for (const auto& v : r.all_found) {
            Integer pp = 0;
            std::uint64_t l1 = 0;
            for (auto x : v.vector) {
                pp += ipow(Integer(std::abs(x)), p);
                l1 += static_cast<std::uint64_t>(std::abs(x));
            }
            EXPECT_EQ(pp, v.norm_pow_p);
            EXPECT_EQ(l1, v.l1);
            EXPECT_GE(v.norm_pow_p, Integer(v.l1));
            EXPECT_TRUE(lat.contains(v.vector));
        }
    }
    // sum |x_i|^p >= sum |x_i| on random integer vectors.
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int t = 0; t < 500; ++t) {
        Integer pp = 0, l1 = 0;
        const unsigned p = 1 + t % 4;
        for (int i = 0; i < 8; ++i) {
            const int x = d(rng);
            pp += ipow(Integer(std::abs(x)), p);
            l1 += std::abs(x);
        }
        EXPECT_GE(pp, l1);
    }
}

TEST(MinDistance, BudgetIsExplicit) {
    Budget tiny;
    tiny.max_enumeration = 10;
    EXPECT_THROW(min_distance_bruteforce(build_lattice(11, 4), 1, 8, tiny), CapacityError);
    EXPECT_THROW(min_distance_bruteforce(build_lattice(7, 3), 0, 6), UsageError);
}

TEST(BpLemma, ExhaustiveSmallFields) {
    for (std::uint64_t q : {5u, 7u, 11u, 13u})
        for (std::size_t k = 2; k <= 4 && 2 * k <= q; ++k) {
            const auto rep = verify_bp_lemma(build_lattice(q, k));
            EXPECT_TRUE(rep.pass) << q << "," << k;
            EXPECT_TRUE(rep.witnesses.empty());
            EXPECT_TRUE(rep.newton_uniqueness);
            EXPECT_EQ(rep.radius, 2 * k - 1);
            EXPECT_GT(rep.multisets_checked, 0u);
        }
    EXPECT_THROW(verify_bp_lemma(build_lattice(7, 4)), UsageError);
}

TEST(BpLemma, BelowTwoKAgreesWithRawEnumeration) {
    for (const auto& [q, k] : std::vector<std::pair<std::uint64_t, std::size_t>>{{5, 2}, {7, 2}, {7, 3}})
        EXPECT_EQ(oracle::min_l1_bruteforce(q, k, 2 * k - 1), 0u) << q << "," << k;
}
