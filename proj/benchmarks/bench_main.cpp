// Benchmarks for the exact kernels: determinant, signature, canonical codes,
// normal-form reduction, and Brieskorn generation.

#include <benchmark/benchmark.h>

#include <random>

#include "plumb/canonical.hpp"
#include "plumb/matrix.hpp"
#include "plumb/moves.hpp"
#include "plumb/seifert.hpp"

namespace {

plumb::PlumbingGraph random_tree(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> wdist(-4, -2);
    std::vector<plumb::Weight> w;
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) {
        w.push_back(wdist(rng));
        if (i > 0) e.emplace_back(std::uniform_int_distribution<int>(0, i - 1)(rng), i);
    }
    return plumb::build_graph(w, e);
}

void BM_Determinant(benchmark::State& state) {
    plumb::PlumbingGraph g = random_tree(static_cast<int>(state.range(0)), 42);
    plumb::IntegerSymmetricMatrix m = plumb::intersection_matrix(g);
    for (auto _ : state) benchmark::DoNotOptimize(plumb::determinant(m));
}
BENCHMARK(BM_Determinant)->Arg(8)->Arg(32)->Arg(128);

void BM_Signature(benchmark::State& state) {
    plumb::PlumbingGraph g = random_tree(static_cast<int>(state.range(0)), 43);
    plumb::IntegerSymmetricMatrix m = plumb::intersection_matrix(g);
    for (auto _ : state) benchmark::DoNotOptimize(plumb::signature(m));
}
BENCHMARK(BM_Signature)->Arg(8)->Arg(32)->Arg(128);

void BM_CanonicalCode(benchmark::State& state) {
    plumb::PlumbingGraph g = random_tree(static_cast<int>(state.range(0)), 44);
    for (auto _ : state) benchmark::DoNotOptimize(plumb::canonical_code(g));
}
BENCHMARK(BM_CanonicalCode)->Arg(8)->Arg(32)->Arg(128);

void BM_Reduce(benchmark::State& state) {
    // chain of (-1)s separated by -3s reduces all the way down
    int n = static_cast<int>(state.range(0));
    std::vector<plumb::Weight> w;
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) {
        w.push_back(i % 2 == 0 ? -3 : -1);
        if (i > 0) e.emplace_back(i - 1, i);
    }
    plumb::PlumbingGraph g = plumb::build_graph(w, e);
    for (auto _ : state) benchmark::DoNotOptimize(plumb::reduce_to_normal_form(g));
}
BENCHMARK(BM_Reduce)->Arg(9)->Arg(33);

void BM_Brieskorn(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(plumb::brieskorn_plumbing(7, 11, 13));
}
BENCHMARK(BM_Brieskorn);

}  // namespace

BENCHMARK_MAIN();
