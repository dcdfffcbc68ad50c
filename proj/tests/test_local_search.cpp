#include <doctest.h>

#include <map>
#include <random>

#include "imioa/exact.hpp"
#include "imioa/graph.hpp"
#include "imioa/local_search.hpp"

using namespace imioa;

namespace {

Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return build_graph(n, e);
}

} // namespace

TEST_CASE("local_improvement returns a saturated assignment") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 25; ++trial) {
        const Graph g = gen_gnp(14, 0.2, rng());
        const int k = 1 + static_cast<int>(rng() % 7);
        const auto [a, trace] = local_improvement(g, k, rng());
        CHECK(a.k == k);
        CHECK(is_saturated(g, a));
        CHECK(trace.final_ioa == ioa_naive(g, a));
        // strictly improving, monotone trace
        int prev = trace.initial_ioa;
        for (const auto& s : trace.swaps) {
            CHECK(s.delta >= 1);
            CHECK(s.ioa_after == prev + s.delta);
            prev = s.ioa_after;
        }
        CHECK(static_cast<int>(trace.swaps.size()) <= g.n);
    }
}

TEST_CASE("local_improvement trivial and deterministic cases") {
    const Graph g = gen_gnp(12, 0.3, 9);
    const auto [a0, t0] = local_improvement(g, 0, 1);
    CHECK(t0.final_ioa == 0);
    CHECK(t0.swaps.empty());

    const auto [a1, t1] = local_improvement(g, 4, 55);
    const auto [a2, t2] = local_improvement(g, 4, 55);
    CHECK(a1.types == a2.types);
    CHECK(t1.swaps.size() == t2.swaps.size());
}

TEST_CASE("star: local improvement always ends at the optimum") {
    const Graph g = gen_star(6);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto [a, trace] = local_improvement(g, 1, seed);
        CHECK(trace.final_ioa == 6);
    }
}

TEST_CASE("tight gadget: clique assignment is a saturated local optimum") {
    const int k = 4;
    const Graph g = gen_tight(k);
    const Assignment w1 = make_assignment(g.n, tight_clique(k));
    CHECK(ioa_naive(g, w1) == k * k + k + 1);  // 21
    CHECK(is_saturated(g, w1));
    const auto [a, trace] = local_improvement_from(g, w1);
    CHECK(trace.swaps.empty());
    CHECK(trace.final_ioa == 21);
}

TEST_CASE("is_saturated via exhaustive pair scan") {
    const Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
    const Assignment a = make_assignment(3, {0, 1});  // types (1,1,2)
    // swapping 0<->2 gives (2,1,1): ioa 2 = current; swapping 1<->2 gives
    // (1,2,1): ioa 3 > 2, so not saturated
    CHECK(ioa_naive(p3, a) == 2);
    CHECK_FALSE(is_saturated(p3, a));
}

TEST_CASE("greedy examples") {
    CHECK(ioa_naive(gen_star(6), greedy(gen_star(6), 1)) == 6);
    CHECK(greedy(gen_star(6), 1).types[0] == 1);  // picks the center

    const Graph g = gen_gnp(10, 0.3, 3);
    CHECK(ioa_naive(g, greedy(g, 0)) == 0);

    const Graph c4 = cycle_graph(4);
    CHECK(ioa_naive(c4, greedy(c4, 1)) == 3);
}

TEST_CASE("greedy ties break to the lowest id") {
    const Graph c4 = cycle_graph(4);  // all vertices symmetric
    CHECK(greedy(c4, 1).types[0] == 1);
}

TEST_CASE("random_assignment: determinism, extremes, uniformity") {
    const Graph g = gen_gnp(5, 0.5, 1);
    CHECK(random_assignment(g, 5, 3).k == 5);
    CHECK(random_assignment(g, 3, 7).types ==
          random_assignment(g, 3, 7).types);

    // frequency of each 2-subset of a 5-set over 10^4 seeds: expected 1000,
    // sd ~ 30; demand within 5 sigma
    std::map<std::vector<std::uint8_t>, int> freq;
    const int trials = 10000;
    for (std::uint64_t s = 0; s < trials; ++s)
        ++freq[random_assignment(g, 2, s).types];
    CHECK(freq.size() == 10);
    for (const auto& [types, count] : freq)
        CHECK(std::abs(count - 1000) <= 150);
}

TEST_CASE("trace JSON lines format") {
    const Graph g = gen_star(6);
    // start with a leaf as type-1, forcing at least one improving swap
    const auto [a, trace] = local_improvement_from(g, make_assignment(6, {1}));
    CHECK(trace.final_ioa == 6);
    REQUIRE(trace.swaps.size() == 1);
    const std::string line = trace_to_jsonl(trace);
    CHECK(line.find("\"u\":1") != std::string::npos);
    CHECK(line.find("\"v\":0") != std::string::npos);
    CHECK(line.find("\"ioa\":6") != std::string::npos);
}
