#include <benchmark/benchmark.h>

#include <array>

#include "supercodim/characters.hpp"
#include "supercodim/codimension.hpp"
#include "supercodim/combinatorics.hpp"
#include "supercodim/exponent.hpp"

using namespace supercodim;

static void BM_EvaluationMatrix(benchmark::State& state) {
    const auto osp = builtin("osp12");
    const unsigned n = static_cast<unsigned>(state.range(0));
    ComputeOptions opts;
    opts.workers = static_cast<unsigned>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(evaluation_matrix(osp, n / 2, n - n / 2, opts));
}
BENCHMARK(BM_EvaluationMatrix)->Args({4, 1})->Args({5, 1})->Args({5, 4})->Unit(benchmark::kMillisecond);

static void BM_RankExact(benchmark::State& state) {
    const auto m = evaluation_matrix(builtin("osp12"), 2, static_cast<unsigned>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(rank_exact(m.values));
}
BENCHMARK(BM_RankExact)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_RankModPrime(benchmark::State& state) {
    const auto m = evaluation_matrix(builtin("osp12"), 2, 3);
    for (auto _ : state) benchmark::DoNotOptimize(rank_mod_prime(m.values, 2147483629u));
}
BENCHMARK(BM_RankModPrime)->Unit(benchmark::kMillisecond);

static void BM_CharacterTable(benchmark::State& state) {
    const unsigned k = static_cast<unsigned>(state.range(0));
    const auto parts = enumerate_partitions(k, k);
    const auto classes = conjugacy_classes(k);
    for (auto _ : state) {
        for (const auto& p : parts) {
            for (const auto& c : classes) benchmark::DoNotOptimize(character_value(p, c));
        }
    }
}
BENCHMARK(BM_CharacterTable)->Arg(6)->Arg(8)->Arg(10);

static void BM_Cocharacter(benchmark::State& state) {
    const auto osp = builtin("osp12");
    for (auto _ : state) benchmark::DoNotOptimize(cocharacter(osp, 2, 2));
}
BENCHMARK(BM_Cocharacter)->Unit(benchmark::kMillisecond);

static void BM_SweepLemma1(benchmark::State& state) {
    const std::array<unsigned, 2> weights{100, 101};
    for (auto _ : state) benchmark::DoNotOptimize(sweep_lemma1(weights, 3, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_SweepLemma1)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_SweepLemma2(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(sweep_lemma2(25, 6, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_SweepLemma2)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_SweepStirling(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(sweep_stirling(300, 4));
}
BENCHMARK(BM_SweepStirling)->Unit(benchmark::kMillisecond);

static void BM_Normalize(benchmark::State& state) {
    const auto tree = parse_bracket_tree("[[x1,[y1,x2]],[[y2,x3],y3]]");
    for (auto _ : state) benchmark::DoNotOptimize(normalize(tree));
}
BENCHMARK(BM_Normalize);

static void BM_Amplify(benchmark::State& state) {
    const auto osp = builtin("osp12");
    const auto f = normalize(parse_bracket_tree("[y1,y2]"));
    const auto sub = *first_nonzero_substitution(osp, f);
    for (auto _ : state) benchmark::DoNotOptimize(iterate_amplification(osp, f, sub, 2));
}
BENCHMARK(BM_Amplify)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
