#include "ldrs/varieties.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ldrs;
using namespace ldrs::varieties;

namespace {

PowerSumSystem make(std::uint64_t q, std::size_t k, std::vector<std::uint64_t> targets, std::size_t n,
                    std::vector<std::uint64_t> forbidden = {}, bool distinct = false) {
    PowerSumSystem s{q, k, std::move(targets), n, std::move(forbidden), distinct};
    s.validate();
    return s;
}

Integer I(std::uint64_t v) { return Integer(v); }

/// Projective F_q-points (first nonzero coordinate 1) of the cone or centered variety with
/// deficient Jacobian rank, for k = 3 (two equations): rank < 2 iff the gradient rows are proportional.
std::vector<std::vector<std::uint64_t>> singular_oracle(std::uint64_t q, std::size_t h, bool centered,
                                                        const std::vector<std::uint64_t>& t, std::uint64_t& on_variety) {
    const std::size_t n = centered ? h + 1 : h;
    std::vector<std::vector<std::uint64_t>> out;
    on_variety = 0;
    oracle::for_each_tuple(oracle::range(0, q), n, [&](const std::vector<std::uint64_t>& x) {
        std::size_t lead = 0;
        while (lead < n && x[lead] == 0) ++lead;
        if (lead == n || x[lead] != 1) return;
        std::uint64_t f1 = 0, f2 = 0;
        std::vector<std::uint64_t> g1(n, 0), g2(n, 0);
        for (std::size_t i = 0; i < h; ++i) {
            f1 = (f1 + x[i]) % q;
            f2 = (f2 + x[i] * x[i]) % q;
            g1[i] = 1;
            g2[i] = 2 * x[i] % q;
        }
        if (centered) {
            const std::uint64_t z = x[h];
            f1 = (f1 + q - t[0] * z % q) % q;
            f2 = (f2 + q - t[1] * z % q * z % q) % q;
            g1[h] = (q - t[0] % q) % q;
            g2[h] = (q - 2 * t[1] % q * z % q) % q;
        }
        if (f1 || f2) return;
        ++on_variety;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if ((g1[a] * g2[b] % q + q - g1[b] * g2[a] % q) % q != 0) return;
        out.push_back(x);
    });
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST(CountPoints, Examples) {
    EXPECT_EQ(count_points(make(7, 2, {3}, 3)), 49);
    EXPECT_EQ(count_points(make(11, 2, {4}, 1)), 1);
    const auto sys = system_for_prefix(7, 3, 4);
    EXPECT_EQ(count_points(sys), I(oracle::count_tuples(7, 3, sys.targets, 4).all));
}

TEST(CountPoints, MatchesNaiveEnumeration) {
    std::mt19937_64 rng(42);
    for (std::uint64_t q : {5u, 7u, 11u, 13u}) {
        for (std::size_t k = 2; k <= 4 && k < q; ++k) {
            for (std::size_t h = 1; oracle::powmod(q, h, ~0ull) <= 200000; ++h) {
                std::vector<std::vector<std::uint64_t>> target_sets{oracle::power_sums(oracle::range(0, h), q, k)};
                std::vector<std::uint64_t> random(k - 1);
                for (auto& v : random) v = rng() % q;
                target_sets.push_back(random);
                for (const auto& t : target_sets) {
                    const auto want = oracle::count_tuples(q, k, t, h);
                    const auto sys = make(q, k, t, h);
                    ASSERT_EQ(count_points(sys), I(want.all)) << q << "," << k << "," << h;
                    ASSERT_EQ(count_points_plain(sys), I(want.all));
                    ASSERT_EQ(count_points_orbit(sys), I(want.all));
                    ASSERT_EQ(count_points_distinct(sys), I(want.distinct));
                    if (h >= 2) {
                        ASSERT_EQ(count_hyperplane_section(sys), I(want.diagonal));
                    }
                }
            }
        }
    }
}

TEST(CountPoints, LinearClosedForm) {
    for (std::uint64_t q : {5u, 7u, 11u, 31u, 101u})
        for (std::size_t h = 1; h <= 6; ++h)
            for (std::uint64_t t : std::vector<std::uint64_t>{0, 1, q - 1}) EXPECT_EQ(count_points(make(q, 2, {t}, h)), ipow(q, h - 1));
}

TEST(CountPoints, ForbiddenValuesMatchNaiveAndAreMonotone) {
    for (std::uint64_t q : {7u, 11u}) {
        for (std::size_t k = 2; k <= 3; ++k) {
            const std::size_t h = 4;
            const auto t = oracle::power_sums(oracle::range(0, h), q, k);
            Integer prev_n = count_points(make(q, k, t, h));
            Integer prev_s = count_points_distinct(make(q, k, t, h));
            std::vector<std::uint64_t> forb;
            for (std::uint64_t a : {0u, 3u, 5u}) {
                forb.push_back(a);
                std::sort(forb.begin(), forb.end());
                const auto want = oracle::count_tuples(q, k, t, h, std::set<std::uint64_t>(forb.begin(), forb.end()));
                const auto sys = make(q, k, t, h, forb);
                const Integer n = count_points(sys);
                const Integer s = count_points_distinct(sys);
                EXPECT_EQ(n, I(want.all));
                EXPECT_EQ(s, I(want.distinct));
                EXPECT_EQ(count_hyperplane_section(sys), I(want.diagonal));
                EXPECT_LE(n, prev_n);
                EXPECT_LE(s, prev_s);
                prev_n = n;
                prev_s = s;
            }
        }
    }
}

TEST(CountDistinct, Examples) {
    const auto sys = make(7, 2, {3}, 3);
    EXPECT_EQ(count_points_distinct(sys), 30);
    EXPECT_EQ(count_subsets(sys), 5);
    EXPECT_EQ(oracle::subsets_with_sums(7, 2, {3}, 3, oracle::range(0, 7)).size(), 5u);
    const auto one = make(7, 3, {2, 4}, 1);
    EXPECT_EQ(count_points_distinct(one), count_points(one));
    EXPECT_EQ(count_points_distinct(make(5, 2, {0}, 6)), 0);
    EXPECT_EQ(count_points_distinct(make(7, 2, {0}, 5, {0, 1, 2})), 0);
    auto d = make(7, 2, {3}, 3);
    d.distinct = true;
    EXPECT_EQ(count_points(d), 30);
}

TEST(Subsets, EnumerationMatchesOracleAndCount) {
    for (std::uint64_t q : {7u, 11u, 13u})
        for (std::size_t k = 2; k <= 4 && k < q; ++k)
            for (std::size_t h = 1; h <= 6; ++h) {
                const auto t = oracle::power_sums(oracle::range(0, h), q, k);
                const auto want = oracle::subsets_with_sums(q, k, t, h, oracle::range(0, q));
                const auto sys = make(q, k, t, h);
                const SubsetSearch search(sys);
                const auto got = search.enumerate(1'000'000);
                ASSERT_EQ(got, want) << q << "," << k << "," << h;
                ASSERT_EQ(count_subsets(sys), I(want.size()));
                ASSERT_EQ(count_points_distinct(sys), factorial(static_cast<unsigned>(h)) * I(want.size()));
                ASSERT_EQ(search.any(), !want.empty());
                if (!want.empty()) {
                    ASSERT_EQ(*search.first(), want.front());
                }
            }
}

TEST(Subsets, LimitIsACapacityError) {
    const SubsetSearch s(make(13, 2, {0}, 4));
    EXPECT_THROW(s.enumerate(3), CapacityError);
}

TEST(Hyperplane, Examples) {
    EXPECT_EQ(count_hyperplane_section(make(7, 2, {3}, 3)), 7);
    const auto sys = system_for_prefix(7, 3, 3);
    EXPECT_EQ(count_hyperplane_section(sys), I(oracle::count_tuples(7, 3, sys.targets, 3).diagonal));
}

TEST(Hyperplane, SymmetricInThePair) {
    const std::uint64_t q = 7;
    const std::size_t k = 3, h = 4;
    const auto t = oracle::power_sums(oracle::range(0, h), q, k);
    const Integer y = count_hyperplane_section(make(q, k, t, h));
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = i + 1; j < h; ++j) {
            std::uint64_t c = 0;
            oracle::for_each_tuple(oracle::range(0, q), h, [&](const std::vector<std::uint64_t>& x) {
                if (x[i] == x[j] && oracle::power_sums(x, q, k) == t) ++c;
            });
            EXPECT_EQ(I(c), y) << i << "," << j;
        }
}

TEST(Sieve, Examples) {
    EXPECT_EQ(sieve_lower_bound(49, 7, 3), 28);
    EXPECT_EQ(sieve_lower_bound(13, 0, 1), 13);
    const auto sys = make(7, 3, {2, 4}, 1);
    EXPECT_EQ(count_points_distinct(sys), count_points(sys));
}

TEST(Sieve, HoldsWhereverAllCountsAreExact) {
    for (std::uint64_t q : {7u, 11u, 13u, 17u})
        for (std::size_t k = 2; k <= 4; ++k)
            for (std::size_t h = 2; h <= 7; ++h) {
                const auto sys = system_for_prefix(q, k, h);
                const Integer n = count_points(sys), s = count_points_distinct(sys), y = count_hyperplane_section(sys);
                EXPECT_LE(s, n);
                EXPECT_GE(s, sieve_lower_bound(n, y, h)) << q << "," << k << "," << h;
            }
}

TEST(Extension, Examples) {
    const auto sys = system_for_prefix(7, 3, 4);
    EXPECT_EQ(count_extension(sys, 1), count_points(sys));
    EXPECT_EQ(count_extension(make(5, 2, {3}, 3), 2), 625);
    EXPECT_THROW(count_extension(sys, 4), UsageError);
}

TEST(Extension, QuadraticExtensionMatchesNaive) {
    // F_25 as F_5[t]/(t^2 + 2); the count does not depend on the choice of modulus.
    const std::uint64_t q = 5;
    const std::vector<std::uint64_t> f{2, 0, 1};
    const auto sys = system_for_prefix(q, 3, 4);
    std::vector<std::vector<std::uint64_t>> elems;
    for (std::uint64_t a = 0; a < 25; ++a) elems.push_back({a % 5, a / 5});
    std::vector<std::vector<std::uint64_t>> sq;
    for (const auto& x : elems) sq.push_back(oracle::ext_mul(x, x, f, q));
    std::uint64_t count = 0;
    std::vector<std::size_t> idx(4, 0);
    for (std::uint64_t code = 0; code < 390625; ++code) {
        std::uint64_t c = code;
        std::uint64_t s1[2] = {0, 0}, s2[2] = {0, 0};
        for (int i = 0; i < 4; ++i) {
            const auto e = c % 25;
            c /= 25;
            for (int d = 0; d < 2; ++d) {
                s1[d] = (s1[d] + elems[e][d]) % q;
                s2[d] = (s2[d] + sq[e][d]) % q;
            }
        }
        if (s1[0] == sys.targets[0] && s1[1] == 0 && s2[0] == sys.targets[1] && s2[1] == 0) ++count;
    }
    EXPECT_EQ(count_extension(sys, 2), I(count));
}

TEST(Extension, HyperplaneOverQuadraticExtension) {
    const auto sys = make(5, 2, {1}, 4);
    EXPECT_EQ(count_hyperplane_section(sys, 2), ipow(25, 2));
}

TEST(Bounds, PointCountExamples) {
    const auto sys = system_for_prefix(7, 3, 4);
    const auto b = check_point_count_bound(count_points(sys), 7, 1, 3, 4);
    EXPECT_TRUE(b.applicable);
    EXPECT_TRUE(b.pass);
    const auto lin = check_point_count_bound(ipow(7, 2), 7, 1, 2, 3);
    EXPECT_EQ(lin.deviation, 0);
    EXPECT_TRUE(lin.pass);
    // The squared comparison is exact at the boundary.
    const Integer rhs2 = ipow(Integer(4), 6) * ipow(Integer(7), 3);
    EXPECT_EQ(lin.rhs_squared, rhs2);
}

TEST(Bounds, HyperplaneExamples) {
    for (std::uint64_t q : {7u, 11u, 13u}) {
        const auto sys = system_for_prefix(q, 3, 5);
        const auto b = check_hyperplane_bound(count_hyperplane_section(sys), q, 1, 3, 5);
        EXPECT_TRUE(b.applicable);
        EXPECT_TRUE(b.pass);
        EXPECT_EQ(b.main_term, ipow(q, 2));
    }
    EXPECT_FALSE(check_hyperplane_bound(7, 7, 1, 2, 3).applicable);
}

TEST(Betti, Examples) {
    const auto b = betti_bound(5, 3, 5, 2);
    EXPECT_EQ(b.general, 972);
    EXPECT_EQ(b.simplified, 972);
    for (std::size_t h = 1; h <= 10; ++h) EXPECT_EQ(betti_bound(h, 2, h, 1).simplified, ipow(2, h));
    EXPECT_THROW(betti_bound(3, 3, 2, 3), UsageError);
}

TEST(Betti, SimplifiedBelowHalfTwoKPowerH) {
    for (std::size_t h = 2; h <= 20; ++h)
        for (std::size_t k = 2; k <= h; ++k) {
            const auto b = betti_bound(h, k, h, k - 1);
            const Integer direct = ldrs::binomial(static_cast<unsigned>(h - 1), static_cast<unsigned>(k - 2)) *
                                   ipow(Integer(k), static_cast<unsigned>(h));
            EXPECT_EQ(b.simplified, direct);
            EXPECT_LT(2 * direct, ipow(Integer(2 * k), static_cast<unsigned>(h))) << h << "," << k;
            EXPECT_TRUE(b.below_half_2k_h);
        }
}

TEST(Smoothness, ConeHasNoSingularRationalPoints) {
    for (std::uint64_t q : {7u, 11u}) {
        const auto rep = jacobian_rank_scan(q, 3, 5, ProjectiveVariety::cone);
        EXPECT_TRUE(rep.singular_points.empty());
        EXPECT_EQ(rep.scope, "rational locus only");
        EXPECT_EQ(rep.expected_dimension, 2u);
        // Projective points = (affine cone points - 1) / (q - 1).
        const auto affine = oracle::count_tuples(q, 3, {0, 0}, 5).all;
        EXPECT_EQ(rep.rational_points, (affine - 1) / (q - 1));
    }
    const auto k1 = jacobian_rank_scan(7, 1, 3, ProjectiveVariety::cone);
    EXPECT_TRUE(k1.singular_points.empty());
    EXPECT_EQ(k1.rational_points, 57u);
}

TEST(Smoothness, SingularListMatchesNaiveScan) {
    for (std::uint64_t q : {5u, 7u}) {
        for (std::size_t h : {3u, 4u, 5u}) {
            const auto t = oracle::power_sums(oracle::range(0, h), q, 3);
            std::uint64_t on = 0;
            auto want = singular_oracle(q, h, false, {}, on);
            auto rep = jacobian_rank_scan(q, 3, h, ProjectiveVariety::cone);
            auto got = rep.singular_points;
            std::sort(got.begin(), got.end());
            EXPECT_EQ(got, want);
            EXPECT_EQ(rep.rational_points, on);

            const std::uint64_t cone_points = on;
            want = singular_oracle(q, h, true, t, on);
            rep = jacobian_rank_scan(q, 3, h, ProjectiveVariety::centered, t);
            got = rep.singular_points;
            std::sort(got.begin(), got.end());
            EXPECT_EQ(got, want) << q << "," << h;
            EXPECT_EQ(rep.rational_points, on);
            // Affine patch plus the cone at infinity.
            EXPECT_EQ(rep.rational_points, oracle::count_tuples(q, 3, t, h).all + cone_points);
        }
    }
}

TEST(Smoothness, ScanBudget) {
    Budget b;
    b.max_work = 1000;
    EXPECT_THROW(jacobian_rank_scan(11, 3, 5, ProjectiveVariety::cone, {}, b), CapacityError);
}

TEST(Dimension, Estimates) {
    const auto lin = estimate_dimension(make(7, 2, {3}, 3));
    EXPECT_EQ(lin.expected, 2u);
    EXPECT_NEAR(lin.levels.at(1).estimate, 2.0, 1e-9);
    EXPECT_NEAR(lin.levels.at(2).estimate, 2.0, 1e-9);
    EXPECT_TRUE(lin.agrees);

    const auto d = estimate_dimension(system_for_prefix(7, 3, 5));
    EXPECT_EQ(d.expected, 3u);
    EXPECT_NEAR(d.levels.at(1).estimate, 3.0, 0.5);
    EXPECT_TRUE(d.agrees);
}

TEST(Dimension, EmptyPath) {
    // h = 1, k = 3: x = t_1 and x^2 = t_2; find a target with no solution by brute force.
    std::vector<std::uint64_t> empty;
    for (std::uint64_t a = 0; a < 7 && empty.empty(); ++a)
        for (std::uint64_t b = 0; b < 7 && empty.empty(); ++b)
            if (oracle::count_tuples(7, 3, {a, b}, 1).all == 0) empty = {a, b};
    ASSERT_FALSE(empty.empty());
    const auto d = estimate_dimension(make(7, 3, empty, 1));
    EXPECT_TRUE(d.empty_over_fq);
    EXPECT_FALSE(d.agrees);
    EXPECT_EQ(d.status, "empty over F_q");
}

TEST(Symmetry, PermutedPrefixesGiveTheSameCounts) {
    const std::uint64_t q = 11;
    std::vector<std::uint64_t> support{0, 1, 2, 3, 4};
    const auto base = count_points(system_for_targets(q, 3, power_sum_targets(q, 3, support), 5));
    std::mt19937_64 rng(3);
    for (int i = 0; i < 5; ++i) {
        std::shuffle(support.begin(), support.end(), rng);
        const auto sys = system_for_targets(q, 3, power_sum_targets(q, 3, support), 5);
        EXPECT_EQ(count_points(sys), base);
    }
}

TEST(Capacity, StateBudgetIsExplicit) {
    Budget b;
    b.max_states = 10;
    EXPECT_THROW(count_points_plain(system_for_prefix(31, 3, 4), 1, b), CapacityError);
    b = Budget{};
    b.max_work = 10;
    EXPECT_THROW(count_subsets(system_for_prefix(31, 3, 4), b), CapacityError);
}

TEST(Validation, Rejects) {
    EXPECT_THROW(make(7, 1, {}, 3), UsageError);
    EXPECT_THROW(make(7, 7, std::vector<std::uint64_t>(6, 0), 3), UsageError);
    EXPECT_THROW(make(7, 3, {1}, 3), UsageError);
    EXPECT_THROW(make(7, 2, {9}, 3), UsageError);
    EXPECT_THROW(make(7, 2, {1}, 0), UsageError);
    EXPECT_THROW(make(7, 2, {1}, 3, {3, 1}), UsageError);
}

TEST(Report, GoldenInstance) {
    const auto r = make_point_count_report(7, 2, 3, {1, 2});
    EXPECT_EQ(r.n, 49);
    EXPECT_EQ(r.n_star, 30);
    EXPECT_EQ(r.subsets, 5);
    EXPECT_EQ(r.y, 7);
    EXPECT_EQ(r.sieve_bound, 28);
    EXPECT_TRUE(r.sieve_holds);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.extensions.at(2).count, ipow(49, 2));
    const auto j = to_json(r);
    EXPECT_EQ(j.at("N"), "49");
    EXPECT_EQ(j.dump(), to_json(make_point_count_report(7, 2, 3, {1, 2})).dump());
}
