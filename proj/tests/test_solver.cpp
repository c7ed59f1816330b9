#include "doctest.h"

#include "frobenius/errors.hpp"
#include "frobenius/oracle.hpp"
#include "frobenius/sampling.hpp"
#include "frobenius/solver.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

using namespace frobenius;

TEST_CASE("pair closed form")
{
    CHECK(sylvester_pair(Int(3), Int(5)) == std::pair<Int, Int>{Int(7), Int(4)});
    CHECK(sylvester_pair(Int(2), Int(3)) == std::pair<Int, Int>{Int(1), Int(1)});
    CHECK(sylvester_pair(Int(7), Int(11))
          == std::pair<Int, Int>{Int(59), Int(30)});
    CHECK_THROWS_AS(sylvester_pair(Int(4), Int(6)), DomainError);
    CHECK_THROWS_AS(sylvester_pair(Int(1), Int(5)), DomainError);
}

TEST_CASE("superfluous generator detection")
{
    CHECK(detect_superfluous(Generators{Int(3), Int(5), Int(8)}) == 2);
    CHECK(detect_superfluous(Generators{Int(8), Int(3), Int(5)}) == 0);
    CHECK(detect_superfluous(Generators{Int(2), Int(3), Int(7)}) == 2);
    CHECK_FALSE(detect_superfluous(Generators{Int(5), Int(6), Int(7)}).has_value());
    CHECK_FALSE(detect_superfluous(Generators{Int(3), Int(4), Int(5)}).has_value());
}

TEST_CASE("triple closed form on frozen data")
{
    const Generators small{Int(5), Int(6), Int(7)};
    const FrobeniusData d{Int(4), Int(2), Int(3), Int(1), Int(2),
                          Int(1), Int(1), Int(3), Int(1)};
    CHECK(frobenius3(small, d) == std::pair<Int, Int>{Int(9), Int(6)});

    const Generators ref{Int(4327), Int(6716), Int(9237)};
    const FrobeniusData rd{Int(130), Int(106), Int(59), Int(59), Int(18),
                           Int(77), Int(41), Int(53), Int(47)};
    CHECK(frobenius3(ref, rd) == std::pair<Int, Int>{Int(920947), Int(493045)});
}

TEST_CASE("solve: reference instance")
{
    const Solution s = solve(Generators{Int(4327), Int(6716), Int(9237)});
    CHECK(s.method == Method::lattice3);
    CHECK(s.g == 920947);
    CHECK(s.N == 493045);
    REQUIRE(s.data.has_value());
    CHECK(s.data->l1 == 130);
    CHECK(s.data->l2 == 106);
    CHECK(s.data->l3 == 59);
    REQUIRE(s.basis.has_value());
    CHECK(s.basis->f3 == LatticeVector{Int(-53), Int(-47), Int(59)});
    CHECK_FALSE(s.diagnostics.has_value());
}

TEST_CASE("solve: dispatch routes")
{
    const Solution pair = solve(Generators{Int(3), Int(5)});
    CHECK(pair.method == Method::sylvester);
    CHECK(pair.g == 7);
    CHECK(pair.N == 4);

    const Solution trivial = solve(Generators{Int(1), Int(5)});
    CHECK(trivial.method == Method::trivial);
    CHECK(trivial.g == -1);
    CHECK(trivial.N == 0);
    CHECK(solve(Generators{Int(1), Int(1), Int(1)}).g == -1);

    const Solution dropped = solve(Generators{Int(3), Int(5), Int(8)});
    CHECK(dropped.method == Method::sylvester);
    CHECK(dropped.g == 7);
    CHECK(dropped.N == 4);
    CHECK_FALSE(dropped.data.has_value());

    const Solution dup = solve(Generators{Int(5), Int(5), Int(7)});
    CHECK(dup.method == Method::sylvester);
    CHECK(dup.g == 23);
    CHECK(dup.N == 12);

    const Solution folded = solve(Generators{Int(6), Int(10), Int(15)});
    CHECK(folded.method == Method::reduced_common_factor);
    CHECK(folded.g == 29);
    CHECK(folded.N == 15);

    const Solution forced =
        solve(Generators{Int(5), Int(6), Int(7)}, {.force_oracle = true});
    CHECK(forced.method == Method::oracle_fallback);
    CHECK(forced.g == 9);
    CHECK(forced.N == 6);

    CHECK_THROWS_AS(solve(Generators{Int(2), Int(4), Int(6)}), InfiniteGapSet);
    CHECK_THROWS_AS(solve(Generators{Int(4), Int(6)}), InfiniteGapSet);
    CHECK_THROWS_AS(solve(Generators{Int(7), Int(7)}), InfiniteGapSet);
}

TEST_CASE("solve: diagnostics attach on the lattice path")
{
    const Solution s =
        solve(Generators{Int(5), Int(6), Int(7)}, {.with_diagnostics = true});
    REQUIRE(s.diagnostics.has_value());
    CHECK(s.diagnostics->z0 == s.N);
    CHECK(s.diagnostics->areas == std::array<Int, 3>{Int(5), Int(6), Int(7)});

    const Solution folded =
        solve(Generators{Int(6), Int(10), Int(15)}, {.with_diagnostics = true});
    CHECK_FALSE(folded.diagnostics.has_value());
}

TEST_CASE("solve: permutation invariance")
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        const auto t = random_pairwise_coprime_triple(rng, 500);
        std::array<std::size_t, 3> perm{0, 1, 2};
        const Solution base = solve(Generators{t[0], t[1], t[2]});
        do {
            const Solution s =
                solve(Generators{t[perm[0]], t[perm[1]], t[perm[2]]});
            CHECK(s.g == base.g);
            CHECK(s.N == base.N);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

TEST_CASE("solve matches the oracle on mixed random instances")
{
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        const auto t = random_pairwise_coprime_triple(rng, 200);
        const Generators a{t[0], t[1], t[2]};
        const Solution s = solve(a);
        const GapSet gs = brute_gaps(a);
        CHECK(s.g == gs.g());
        CHECK(s.N == gs.count());
    }
    for (int trial = 0; trial < 40; ++trial) {
        const auto t = random_common_factor_triple(rng, 120);
        const Generators a{t[0], t[1], t[2]};
        const Solution s = solve(a);
        const GapSet gs = brute_gaps(a);
        if (t[0] != t[1] && t[0] != t[2] && t[1] != t[2])
            CHECK(s.method == Method::reduced_common_factor);
        CHECK(s.g == gs.g());
        CHECK(s.N == gs.count());
    }
}

TEST_CASE("solve: family with known closed form at any scale")
{
    // a = (2n-1, 2n, 2n+1) has g = 2n^2 - 3n and N = n^2 - n
    for (std::uint64_t n = 2; n <= 60; ++n) {
        const Solution s =
            solve(Generators{Int(2 * n - 1), Int(2 * n), Int(2 * n + 1)});
        CHECK(s.g == Int(2 * n * n - 3 * n));
        CHECK(s.N == Int(n * n - n));
    }

    const Int n("1000000000000000000000000000000000000039");
    const Solution s = solve(Generators{2 * n - 1, 2 * n, 2 * n + 1});
    CHECK(s.method == Method::lattice3);
    CHECK(s.g == 2 * n * n - 3 * n);
    CHECK(s.N == n * n - n);
}

TEST_CASE("method names")
{
    CHECK(to_string(Method::trivial) == "trivial");
    CHECK(to_string(Method::sylvester) == "sylvester");
    CHECK(to_string(Method::lattice3) == "lattice3");
    CHECK(to_string(Method::reduced_common_factor) == "reduced-common-factor");
    CHECK(to_string(Method::oracle_fallback) == "oracle-fallback");
}
