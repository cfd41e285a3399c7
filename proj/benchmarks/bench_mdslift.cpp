// SPDX-License-Identifier: Apache-2.0

#include "mdslift/mdslift.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace mdslift;

static void BM_ExtensionMul(benchmark::State& state)
{
    const FieldSpec f = make_extension_field(7, static_cast<unsigned>(state.range(0)));
    std::mt19937_64 rng(1);
    std::vector<Index> xs(1024);
    for (auto& x : xs)
        x = static_cast<Index>(rng() % f.order());
    Index acc = 1;
    for (auto _ : state) {
        for (Index x : xs)
            acc = f.mul(acc | 1, x);
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
}
BENCHMARK(BM_ExtensionMul)->Arg(2)->Arg(3)->Arg(6);

static void BM_FieldConstruction(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(make_extension_field(2, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_FieldConstruction)->Arg(8)->Arg(16)->Arg(20);

static void BM_IsMdsLifted(benchmark::State& state)
{
    const FieldSpec f = make_extension_field(7, 3);
    const LinearCode base = example1_code();
    std::uint64_t seed = 0;
    for (auto _ : state) {
        const LinearCode lifted = lift(base, sample_dh(f, base.n(), seed++));
        benchmark::DoNotOptimize(is_mds(lifted));
    }
}
BENCHMARK(BM_IsMdsLifted);

static void BM_MinDistance(benchmark::State& state)
{
    const FieldSpec f = make_extension_field(7, static_cast<unsigned>(state.range(0)));
    const LinearCode lifted = lift(example1_code(), sample_dh(f, 8, 0));
    for (auto _ : state) {
        const LinearCode copy(lifted.generator());
        benchmark::DoNotOptimize(min_distance(copy));
    }
}
BENCHMARK(BM_MinDistance)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_ErasureRoundTrip(benchmark::State& state)
{
    const FieldSpec f = make_extension_field(7, 3);
    const LinearCode code = lift(example1_code(), sample_dh(f, 8, 0), {.strict_dh = true, .systematize = true});
    std::mt19937_64 rng(5);
    const std::vector<std::size_t> erased{0, 2, 4, 6, 7};
    for (auto _ : state) {
        std::vector<FieldElement> msg;
        for (int i = 0; i < 3; ++i)
            msg.push_back(f.element(static_cast<Index>(rng() % f.order())));
        const auto word = erase(erasure_encode(code, msg), erased);
        benchmark::DoNotOptimize(erasure_decode(ErasureWord(code, word)));
    }
}
BENCHMARK(BM_ErasureRoundTrip);

static void BM_DiversityCount(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(diversity_count(2, 20, static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_DiversityCount)->Arg(8)->Arg(255);

BENCHMARK_MAIN();
