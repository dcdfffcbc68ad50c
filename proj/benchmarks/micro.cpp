#include <benchmark/benchmark.h>

#include "imioa/assignment.hpp"
#include "imioa/exact.hpp"
#include "imioa/graph.hpp"
#include "imioa/local_search.hpp"
#include "imioa/treewidth.hpp"

namespace {

using namespace imioa;

void BM_swap_delta(benchmark::State& state) {
    const Graph g = gen_gnp(static_cast<int>(state.range(0)), 0.1, 7);
    const Assignment a = random_assignment(g, g.n / 4, 1);
    const IoACache cache = build_cache(g, a);
    const auto v1 = type1_vertices(a);
    int v2 = 0;
    while (a.types[v2] == 1) ++v2;
    int i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            swap_delta(g, a, cache, v1[i % v1.size()], v2));
        ++i;
    }
}
BENCHMARK(BM_swap_delta)->Arg(100)->Arg(1000);

void BM_apply_swap(benchmark::State& state) {
    const Graph g = gen_gnp(static_cast<int>(state.range(0)), 0.1, 7);
    Assignment a = random_assignment(g, g.n / 4, 1);
    IoACache cache = build_cache(g, a);
    int v1 = 0, v2 = 0;
    while (a.types[v1] != 1) ++v1;
    while (a.types[v2] != 2) ++v2;
    for (auto _ : state) {
        apply_swap(cache, g, a, v1, v2);
        std::swap(v1, v2);  // swap back next iteration
    }
}
BENCHMARK(BM_apply_swap)->Arg(100)->Arg(1000);

void BM_local_improvement(benchmark::State& state) {
    const Graph g = gen_gnp(static_cast<int>(state.range(0)), 0.05, 7);
    std::uint64_t seed = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(local_improvement(g, g.n / 4, seed++));
}
BENCHMARK(BM_local_improvement)->Arg(50)->Arg(200);

void BM_solve_dp(benchmark::State& state) {
    const Graph g = gen_grid(3, static_cast<int>(state.range(0)));
    const auto nd = to_nice(min_fill_decomposition(g));
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_dp(g, nd, g.n / 4, DpLimits{}));
}
BENCHMARK(BM_solve_dp)->Arg(4)->Arg(8);

void BM_brute_force(benchmark::State& state) {
    const Graph g = gen_gnp(static_cast<int>(state.range(0)), 0.2, 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(brute_force_opt(g, g.n / 3));
}
BENCHMARK(BM_brute_force)->Arg(12)->Arg(16);

} // namespace

BENCHMARK_MAIN();
