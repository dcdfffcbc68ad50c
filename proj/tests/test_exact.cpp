#include <doctest.h>

#include <random>

#include "imioa/errors.hpp"
#include "imioa/exact.hpp"
#include "imioa/graph.hpp"

using namespace imioa;

namespace {

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return build_graph(n, e);
}

Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return build_graph(n, e);
}

// order-independent re-enumeration: max ioa over all k-subsets by a
// different (lexicographic, unpruned) recursion
int plain_max(const Graph& g, int k) {
    std::vector<int> pick;
    int best = 0;
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(pick.size()) == k) {
            best = std::max(best, ioa_naive(g, make_assignment(g.n, pick)));
            return;
        }
        for (int v = from; v < g.n; ++v) {
            pick.push_back(v);
            self(self, v + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return best;
}

} // namespace

TEST_CASE("brute_force_opt basics") {
    const Graph star = gen_star(8);
    const ExactResult r = brute_force_opt(star, 1);
    CHECK(r.opt_value == 8);
    CHECK(ioa_naive(star, r.witness) == 8);
    CHECK(r.witness.k == 1);

    CHECK(brute_force_opt(star, 0).opt_value == 0);
}

TEST_CASE("witness always achieves the reported value") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = gen_gnp(10, 0.25, rng());
        const int k = static_cast<int>(rng() % 6);
        const ExactResult r = brute_force_opt(g, k);
        CHECK(ioa_naive(g, r.witness) == r.opt_value);
        CHECK(r.witness.k == k);
        CHECK(r.opt_value == plain_max(g, k));  // order-independent recheck
    }
}

TEST_CASE("tight(3) optimum at k=3 is 15 (exhaustively derived)") {
    // The clique assignment scores k^2+k+1 = 13; the true optimum over all
    // C(19,3) subsets is 15.
    const ExactResult r = brute_force_opt(gen_tight(3), 3);
    CHECK(r.opt_value == 15);
}

TEST_CASE("nodes_explored is deterministic") {
    const Graph g = gen_gnp(12, 0.3, 5);
    const ExactResult a = brute_force_opt(g, 4);
    const ExactResult b = brute_force_opt(g, 4);
    CHECK(a.nodes_explored == b.nodes_explored);
    CHECK(a.opt_value == b.opt_value);
    CHECK(a.witness.types == b.witness.types);
}

TEST_CASE("budget errors are distinct from infeasibility") {
    const Graph g = gen_gnp(40, 0.1, 1);
    CHECK_THROWS_AS(brute_force_opt(g, 20, 1000), budget_error);
}

TEST_CASE("is_k_coverable") {
    CHECK(is_k_coverable(build_graph(2, {{0, 1}}), 1));
    CHECK(is_k_coverable(gen_star(6), 1));
    CHECK_FALSE(is_k_coverable(build_graph(3, {{0, 1}, {1, 2}, {0, 2}}), 0));
    CHECK_FALSE(is_k_coverable(path_graph(4), 1));
}

TEST_CASE("coverability matches full-objective equality") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = gen_gnp(9, 0.3, rng());
        const int k = static_cast<int>(rng() % 5);
        CHECK(is_k_coverable(g, k) == (brute_force_opt(g, k).opt_value == g.n));
    }
}

TEST_CASE("domination number via coverability") {
    CHECK(min_dominating_set_size_via_coverability(gen_star(6)) == 1);
    CHECK(min_dominating_set_size_via_coverability(path_graph(4)) == 2);
    CHECK(min_dominating_set_size_via_coverability(cycle_graph(6)) == 2);
    const Graph isolated = build_graph(3, {{0, 1}});
    CHECK_THROWS_AS(min_dominating_set_size_via_coverability(isolated),
                    precondition_error);
}

TEST_CASE("ExactResult JSON export") {
    const Graph edge = build_graph(2, {{0, 1}});
    const std::string j = exact_result_to_json(brute_force_opt(edge, 1));
    CHECK(j.find("\"opt\":2") != std::string::npos);
    CHECK(j.find("\"witness\"") != std::string::npos);
}
