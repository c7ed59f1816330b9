#include "doctest.h"

#include "frobenius/errors.hpp"
#include "frobenius/integer_kernel.hpp"
#include "frobenius/oracle.hpp"
#include "frobenius/sampling.hpp"

#include <cstdint>
#include <random>
#include <vector>

using namespace frobenius;

TEST_CASE("membership table: frozen instances")
{
    const std::vector<bool> t35 = membership_table(Generators{Int(3), Int(5)}, 10);
    const std::vector<bool> expected35 = {true, false, false, true, false, true,
                                          true, false, true, true, true};
    CHECK(t35 == expected35);

    const std::vector<bool> t567 =
        membership_table(Generators{Int(5), Int(6), Int(7)}, 15);
    for (std::uint64_t z = 0; z <= 15; ++z) {
        const bool is_gap = z == 1 || z == 2 || z == 3 || z == 4 || z == 8
                            || z == 9;
        CHECK(t567[z] == !is_gap);
    }

    CHECK_THROWS_AS(membership_table(Generators{Int(3), Int(5)}, 100, 50),
                    LimitExceeded);
}

TEST_CASE("gap enumeration: frozen instances")
{
    const GapSet g35 = brute_gaps(Generators{Int(3), Int(5)});
    CHECK(g35.gaps == std::vector<std::uint64_t>{1, 2, 4, 7});
    CHECK(g35.g() == 7);
    CHECK(g35.count() == 4);

    const GapSet g23 = brute_gaps(Generators{Int(2), Int(3)});
    CHECK(g23.gaps == std::vector<std::uint64_t>{1});

    const GapSet g711 = brute_gaps(Generators{Int(7), Int(11)});
    CHECK(g711.g() == 59);
    CHECK(g711.count() == 30);

    const GapSet g567 = brute_gaps(Generators{Int(5), Int(6), Int(7)});
    CHECK(g567.gaps == std::vector<std::uint64_t>{1, 2, 3, 4, 8, 9});

    const GapSet g345 = brute_gaps(Generators{Int(3), Int(4), Int(5)});
    CHECK(g345.g() == 2);
    CHECK(g345.count() == 2);

    const GapSet mixed = brute_gaps(Generators{Int(6), Int(10), Int(15)});
    CHECK(mixed.g() == 29);
    CHECK(mixed.count() == 15);

    CHECK_THROWS_AS(brute_gaps(Generators{Int(4), Int(6)}), InfiniteGapSet);
    CHECK_THROWS_AS(brute_gaps(Generators{Int(2), Int(4), Int(6)}),
                    InfiniteGapSet);
    CHECK_THROWS_AS(brute_gaps(Generators{Int(1000003), Int(1000033)}, 1000),
                    LimitExceeded);
}

TEST_CASE("gap enumeration: reference instance at full scale")
{
    const GapSet gs =
        brute_gaps(Generators{Int(4327), Int(6716), Int(9237)}, 2'000'000);
    CHECK(gs.g() == 920947);
    CHECK(gs.count() == 493045);
}

TEST_CASE("a generator of one leaves no gaps")
{
    const GapSet gs = brute_gaps(Generators{Int(1), Int(8)});
    CHECK(gs.gaps.empty());
    CHECK(gs.g() == -1);
    CHECK(gs.count() == 0);
}

TEST_CASE("frontier certificate and table agreement")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        const auto t = random_pairwise_coprime_triple(rng, 80);
        const Generators a{t[0], t[1], t[2]};
        const GapSet gs = brute_gaps(a);
        CHECK(gs.frontier > gs.g());

        const std::uint64_t frontier = gs.frontier.convert_to<std::uint64_t>();
        const std::vector<bool> table = membership_table(a, frontier);
        std::vector<std::uint64_t> from_table;
        for (std::uint64_t z = 1; z <= frontier; ++z)
            if (!table[z])
                from_table.push_back(z);
        CHECK(gs.gaps == from_table);
    }
}

TEST_CASE("exhaustive minimal-multiple search: frozen instances")
{
    const BruteData small = brute_lx(Generators{Int(5), Int(6), Int(7)});
    CHECK(small.unique);
    CHECK(small.data.l1 == 4);
    CHECK(small.data.l2 == 2);
    CHECK(small.data.l3 == 3);
    CHECK(small.data.x12 == 1);
    CHECK(small.data.x13 == 2);
    CHECK(small.data.x21 == 1);
    CHECK(small.data.x23 == 1);
    CHECK(small.data.x31 == 3);
    CHECK(small.data.x32 == 1);

    const BruteData family = brute_lx(Generators{Int(9), Int(10), Int(11)});
    CHECK(family.unique);
    CHECK(family.data.l1 == 6);
    CHECK(family.data.l2 == 2);
    CHECK(family.data.l3 == 5);
    CHECK(family.data.x13 == 4);
    CHECK(family.data.x31 == 5);

    // 13 = 2*2 + 3*3 = 5*2 + 1*3: minimal multiple but two representations
    const BruteData loose = brute_lx(Generators{Int(2), Int(3), Int(13)});
    CHECK_FALSE(loose.unique);
    CHECK(loose.data.l3 == 1);
    CHECK(loose.data.x31 == 2);
    CHECK(loose.data.x32 == 3);

    CHECK_THROWS_AS(brute_lx(Generators{Int(6), Int(10), Int(15)}), DomainError);
    CHECK_THROWS_AS(brute_lx(Generators{Int(3), Int(5)}), DomainError);
    CHECK_THROWS_AS(brute_lx(Generators{Int(100003), Int(100019), Int(100043)},
                             100000),
                    LimitExceeded);
}

TEST_CASE("minimal multiples really are minimal")
{
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 30; ++trial) {
        const auto t = random_pairwise_coprime_triple(rng, 50);
        const Generators a{t[0], t[1], t[2]};
        const BruteData bd = brute_lx(a);
        const Int l[3] = {bd.data.l1, bd.data.l2, bd.data.l3};
        for (std::size_t i = 0; i < 3; ++i) {
            const std::size_t j = (i + 1) % 3, k = (i + 2) % 3;
            const std::uint64_t bound =
                (a[j] * a[k] + a[i]).convert_to<std::uint64_t>();
            const std::vector<bool> table =
                membership_table(Generators{a[j], a[k]}, bound);
            for (Int cand = 1; cand < l[i]; ++cand)
                CHECK_FALSE(table[(cand * a[i]).convert_to<std::uint64_t>()]);
            CHECK(table[(l[i] * a[i]).convert_to<std::uint64_t>()]);
        }
    }
}

TEST_CASE("samplers are deterministic and hit their class")
{
    std::mt19937_64 rng_a(7), rng_b(7);
    for (int i = 0; i < 50; ++i) {
        const auto x = random_pairwise_coprime_triple(rng_a, 300);
        const auto y = random_pairwise_coprime_triple(rng_b, 300);
        CHECK(x == y);
    }
    std::mt19937_64 rng(8);
    for (int i = 0; i < 100; ++i) {
        const auto t = random_pairwise_coprime_triple(rng, 300);
        CHECK(gcd(gcd(t[0], t[1]), t[2]) == 1);
    }
    for (int i = 0; i < 100; ++i) {
        const auto t = random_common_factor_triple(rng, 300);
        const bool shares = gcd(t[0], t[1]) > 1 || gcd(t[0], t[2]) > 1
                            || gcd(t[1], t[2]) > 1;
        CHECK(shares);
        CHECK(gcd(gcd(t[0], t[1]), t[2]) == 1);
    }
}
