/**
 * @file bench_solve.cpp
 * @brief Microbenchmarks: full solves across magnitudes, the reduction
 *        and Bézout kernels, and the brute-force oracle for contrast.
 */
#include <benchmark/benchmark.h>

#include "frobenius/frobenius.hpp"

#include <cstdint>
#include <random>
#include <vector>

using namespace frobenius;

namespace {

std::vector<Generators> corpus(std::uint64_t max, std::size_t count)
{
    std::mt19937_64 rng(0xBE2C ^ max);
    std::vector<Generators> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const auto t = random_pairwise_coprime_triple(rng, max);
        out.push_back(Generators{t[0], t[1], t[2]});
    }
    return out;
}

void BM_Solve(benchmark::State& state)
{
    const auto instances =
        corpus(static_cast<std::uint64_t>(state.range(0)), 64);
    std::size_t i = 0;
    for (auto _ : state) {
        const Solution s = solve(instances[i++ % instances.size()]);
        benchmark::DoNotOptimize(s.g);
    }
}

void BM_SolveWithDiagnostics(benchmark::State& state)
{
    const auto instances =
        corpus(static_cast<std::uint64_t>(state.range(0)), 64);
    SolveOptions opts;
    opts.with_diagnostics = true;
    std::size_t i = 0;
    for (auto _ : state) {
        const Solution s = solve(instances[i++ % instances.size()], opts);
        benchmark::DoNotOptimize(s.N);
    }
}

void BM_LagrangeReduce(benchmark::State& state)
{
    const auto instances =
        corpus(static_cast<std::uint64_t>(state.range(0)), 64);
    std::size_t i = 0;
    for (auto _ : state) {
        const Generators& a = instances[i++ % instances.size()];
        const ReductionResult r =
            lagrange_reduce(initial_basis(a), GramForm(a));
        benchmark::DoNotOptimize(r.loop_count);
    }
}

void BM_ExtendedGcd(benchmark::State& state)
{
    std::mt19937_64 rng(0x6CD);
    std::uniform_int_distribution<std::uint64_t> dist(
        2, static_cast<std::uint64_t>(state.range(0)));
    std::vector<std::pair<Int, Int>> pairs;
    for (int i = 0; i < 64; ++i)
        pairs.emplace_back(dist(rng), dist(rng));
    std::size_t i = 0;
    for (auto _ : state) {
        const auto& [x, y] = pairs[i++ % pairs.size()];
        benchmark::DoNotOptimize(extended_gcd(x, y).g);
    }
}

void BM_OracleBruteGaps(benchmark::State& state)
{
    const auto instances =
        corpus(static_cast<std::uint64_t>(state.range(0)), 16);
    std::size_t i = 0;
    for (auto _ : state) {
        const GapSet gs = brute_gaps(instances[i++ % instances.size()]);
        benchmark::DoNotOptimize(gs.frontier);
    }
}

void BM_PairMembership(benchmark::State& state)
{
    const Int a1 = 4327, a2 = 6716;
    Int z = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_representable_pair(a1, a2, z));
        z = (z * 7 + 3) % (a1 * a2);
    }
}

} // namespace

BENCHMARK(BM_Solve)->Arg(1000)->Arg(1000000)->Arg(1000000000)
    ->Arg(1000000000000);
BENCHMARK(BM_SolveWithDiagnostics)->Arg(1000000000000);
BENCHMARK(BM_LagrangeReduce)->Arg(1000)->Arg(1000000000000);
BENCHMARK(BM_ExtendedGcd)->Arg(1000000000000);
BENCHMARK(BM_OracleBruteGaps)->Arg(60)->Arg(300);
BENCHMARK(BM_PairMembership);

BENCHMARK_MAIN();
