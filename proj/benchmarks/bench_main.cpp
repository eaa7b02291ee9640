#include "csa_embed/embed.hpp"
#include "csa_embed/hasse.hpp"
#include "csa_embed/oracle.hpp"
#include "csa_embed/solutions.hpp"

#include <benchmark/benchmark.h>

using namespace csa_embed;

namespace {

// k = delta always holds, so the scan is exhaustive.
void BM_HassePairHolds(benchmark::State& state)
{
    const auto k = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(hasse_pair_decide(k, k));
}
BENCHMARK(BM_HassePairHolds)->Arg(8)->Arg(16)->Arg(24)->Arg(32)->Unit(benchmark::kMillisecond);

// (k, 2k) fails for these k; the scan stops at the first witness.
void BM_HassePairFirstWitness(benchmark::State& state)
{
    const auto k = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(hasse_pair_decide(k, k * 2));
}
BENCHMARK(BM_HassePairFirstWitness)->Arg(8)->Arg(16)->Arg(32);

void BM_HassePairAllWitnesses(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(hasse_pair_decide(12, 24, {.all_witnesses = true}));
}
BENCHMARK(BM_HassePairAllWitnesses);

void BM_CrossCheck(benchmark::State& state)
{
    std::vector<Pair> pairs;
    for (std::uint64_t seed = 0; seed < 64; ++seed)
        pairs.push_back(oracle::random_valid_pair(seed));
    std::size_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle::cross_check(pairs[i++ % pairs.size()]));
}
BENCHMARK(BM_CrossCheck);

void BM_CountTable(benchmark::State& state)
{
    const oracle::DiophantineInstance inst{{1, 2, 3, 5, 7}, static_cast<std::uint64_t>(state.range(0))};
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle::dp_count(inst));
}
BENCHMARK(BM_CountTable)->Arg(100)->Arg(1000)->Arg(10000);

void BM_CountDirect(benchmark::State& state)
{
    const std::vector<std::uint64_t> ell{1, 2, 3, 5, 7};
    const auto target = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(count_positive_solutions(ell, target));
}
BENCHMARK(BM_CountDirect)->Arg(100)->Arg(1000)->Arg(10000);

void BM_PositiveSolvable(benchmark::State& state)
{
    const std::vector<std::uint64_t> ell{6, 10, 15};
    const auto target = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(positive_solvable(ell, target));
}
BENCHMARK(BM_PositiveSolvable)->Arg(1000)->Arg(1'000'000'007);

}  // namespace

BENCHMARK_MAIN();
