#include <doctest.h>

#include <algorithm>
#include <random>

#include "imioa/errors.hpp"
#include "imioa/exact.hpp"
#include "imioa/graph.hpp"
#include "imioa/treewidth.hpp"

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

Graph clique_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return build_graph(n, e);
}

Graph random_tree(int n, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v < n; ++v)
        e.emplace_back(static_cast<int>(rng() % v), v);
    return build_graph(n, e);
}

bool valid_nice_shape(const NiceDecomposition& nd) {
    for (const auto& n : nd.nodes) {
        switch (n.kind) {
            case NiceNode::Kind::leaf:
                if (!n.children.empty() || n.bag.size() != 1) return false;
                break;
            case NiceNode::Kind::introduce: {
                if (n.children.size() != 1) return false;
                const auto& cb = nd.nodes[n.children[0]].bag;
                if (n.bag.size() != cb.size() + 1) return false;
                if (!std::binary_search(n.bag.begin(), n.bag.end(), n.vertex))
                    return false;
                break;
            }
            case NiceNode::Kind::forget: {
                if (n.children.size() != 1) return false;
                const auto& cb = nd.nodes[n.children[0]].bag;
                if (n.bag.size() + 1 != cb.size()) return false;
                if (!std::binary_search(cb.begin(), cb.end(), n.vertex))
                    return false;
                break;
            }
            case NiceNode::Kind::join:
                if (n.children.size() != 2) return false;
                for (int c : n.children)
                    if (nd.nodes[c].bag != n.bag) return false;
                break;
        }
    }
    return nd.root >= 0 && nd.root < static_cast<int>(nd.nodes.size());
}

int count_kind(const NiceDecomposition& nd, NiceNode::Kind kind) {
    int c = 0;
    for (const auto& node : nd.nodes) c += (node.kind == kind);
    return c;
}

// Credit-free DP over states (S, gamma) on the same nice decomposition.
// Each vertex's integrated status is settled at its introduce node against
// the bag only, so integration provided by later-introduced neighbors is
// missed. Kept here purely to demonstrate why the credited DP is needed.
struct NaiveDp {
    const Graph& g;
    const NiceDecomposition& nd;

    int bag_integrated(const std::vector<int>& bag, unsigned s, int v) const {
        const int t = 1 + !((s >> index_of(bag, v)) & 1);
        for (std::size_t i = 0; i < bag.size(); ++i) {
            const int u = bag[i];
            if (u == v || !g.has_edge(u, v)) continue;
            const int tu = 1 + !((s >> i) & 1);
            if (tu != t) return 1;
        }
        return 0;
    }

    static int index_of(const std::vector<int>& bag, int v) {
        return static_cast<int>(
            std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
    }

    // table[node][s * (kmax+1) + gamma]
    std::vector<std::vector<int>> tables;
    int kmax = 0;

    void run(int node) {
        const NiceNode& nn = nd.nodes[node];
        for (int c : nn.children) run(c);
        const int b = static_cast<int>(nn.bag.size());
        auto& tab = tables[node];
        tab.assign((std::size_t(1) << b) * (kmax + 1), -1);
        auto at = [&](unsigned s, int gamma) -> int& {
            return tab[std::size_t(s) * (kmax + 1) + gamma];
        };
        if (nn.kind == NiceNode::Kind::leaf) {
            for (unsigned s = 0; s < (1u << b); ++s) {
                int z = 0;
                for (int i = 0; i < b; ++i)
                    z += bag_integrated(nn.bag, s, nn.bag[i]);
                const int gamma = __builtin_popcount(s);
                if (gamma <= kmax) at(s, gamma) = z;
            }
            return;
        }
        const NiceNode& c0 = nd.nodes[nn.children[0]];
        if (nn.kind == NiceNode::Kind::introduce) {
            const int vi = index_of(nn.bag, nn.vertex);
            for (unsigned s = 0; s < (1u << b); ++s) {
                const unsigned low = s & ((1u << vi) - 1);
                const unsigned cs = low | ((s >> (vi + 1)) << vi);
                const int vin = (s >> vi) & 1;
                const int bonus = bag_integrated(nn.bag, s, nn.vertex);
                for (int gamma = vin; gamma <= kmax; ++gamma) {
                    const int cv = tables[nn.children[0]]
                        [std::size_t(cs) * (kmax + 1) + gamma - vin];
                    if (cv >= 0) at(s, gamma) = cv + bonus;
                }
            }
        } else if (nn.kind == NiceNode::Kind::forget) {
            const int vi = index_of(c0.bag, nn.vertex);
            for (unsigned s = 0; s < (1u << b); ++s) {
                const unsigned low = s & ((1u << vi) - 1);
                const unsigned base = low | ((s >> vi) << (vi + 1));
                for (int gamma = 0; gamma <= kmax; ++gamma) {
                    int best = -1;
                    for (int vt = 0; vt < 2; ++vt) {
                        const unsigned cs = base | (unsigned(vt) << vi);
                        best = std::max(best, tables[nn.children[0]]
                            [std::size_t(cs) * (kmax + 1) + gamma]);
                    }
                    at(s, gamma) = best;
                }
            }
        } else {  // join
            for (unsigned s = 0; s < (1u << b); ++s) {
                int z = 0;
                for (int i = 0; i < b; ++i)
                    z += bag_integrated(nn.bag, s, nn.bag[i]);
                const int sbits = __builtin_popcount(s);
                for (int gamma = sbits; gamma <= kmax; ++gamma) {
                    int best = -1;
                    for (int g1 = sbits; g1 <= gamma; ++g1) {
                        const int g2 = gamma + sbits - g1;
                        if (g2 < sbits || g2 > kmax || g1 > kmax) continue;
                        const int a = tables[nn.children[0]]
                            [std::size_t(s) * (kmax + 1) + g1];
                        const int c = tables[nn.children[1]]
                            [std::size_t(s) * (kmax + 1) + g2];
                        if (a >= 0 && c >= 0) best = std::max(best, a + c - z);
                    }
                    at(s, gamma) = best;
                }
            }
        }
        for (int c : nn.children) tables[c].clear();
    }

    int solve(int k) {
        kmax = k;
        tables.assign(nd.nodes.size(), {});
        run(nd.root);
        const NiceNode& root = nd.nodes[nd.root];
        int best = -1;
        for (unsigned s = 0; s < (1u << root.bag.size()); ++s) {
            const int v = tables[nd.root][std::size_t(s) * (kmax + 1) + k];
            best = std::max(best, v);
        }
        return best;
    }
};

} // namespace

TEST_CASE("min_fill width on known families") {
    std::mt19937_64 rng(3);
    const Graph tree = random_tree(12, rng);
    const TreeDecomposition t1 = min_fill_decomposition(tree);
    CHECK(t1.width() == 1);
    CHECK(validate_decomposition(tree, t1));

    const Graph c7 = cycle_graph(7);
    const TreeDecomposition t2 = min_fill_decomposition(c7);
    CHECK(t2.width() == 2);
    CHECK(validate_decomposition(c7, t2));

    const Graph k4 = clique_graph(4);
    const TreeDecomposition t3 = min_fill_decomposition(k4);
    CHECK(t3.width() == 3);
    CHECK(validate_decomposition(k4, t3));
}

TEST_CASE("min_fill always yields valid decompositions") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = gen_gnp(11, 0.25, rng());
        CHECK(validate_decomposition(g, min_fill_decomposition(g)));
    }
}

TEST_CASE("validate_decomposition rejects broken inputs") {
    const Graph g = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    TreeDecomposition single;
    single.bags = {{0, 1, 2, 3}};
    CHECK(validate_decomposition(g, single));

    TreeDecomposition bad;
    bad.bags = {{0, 1}, {2, 3}};  // edge (1,2) in no bag
    bad.tree_edges = {{0, 1}};
    CHECK_FALSE(validate_decomposition(g, bad));

    TreeDecomposition broken_subtree;
    broken_subtree.bags = {{0, 1}, {1, 2}, {2, 3}, {1, 3}};
    broken_subtree.tree_edges = {{0, 1}, {1, 2}, {2, 3}};
    // vertex 1 appears in bags 0,1,3 but bag 2 breaks the subtree? no:
    // bags containing 1 are {0,1,3}; path 1-2-3 passes through bag 2 which
    // lacks vertex 1 -> disconnected subtree
    CHECK_FALSE(validate_decomposition(g, broken_subtree));
}

TEST_CASE("to_nice structure") {
    // single bag: a leaf with a chain of introduces, no joins or forgets
    TreeDecomposition single;
    single.bags = {{0, 1, 2}};
    const NiceDecomposition n1 = to_nice(single);
    CHECK(count_kind(n1, NiceNode::Kind::join) == 0);
    CHECK(count_kind(n1, NiceNode::Kind::leaf) == 1);
    CHECK(count_kind(n1, NiceNode::Kind::introduce) == 2);
    CHECK(valid_nice_shape(n1));

    // path decomposition: no joins
    const Graph p4 = path_graph(4);
    const NiceDecomposition n2 = to_nice(min_fill_decomposition(p4));
    CHECK(count_kind(n2, NiceNode::Kind::join) == 0);

    // star-shaped decomposition with 3 branches: binary-join expansion
    // needs at least 2 joins at the central bag
    TreeDecomposition star_td;
    star_td.bags = {{0}, {0, 1}, {0, 2}, {0, 3}};
    star_td.tree_edges = {{0, 1}, {0, 2}, {0, 3}};
    const NiceDecomposition n3 = to_nice(star_td);
    CHECK(count_kind(n3, NiceNode::Kind::join) >= 2);
    CHECK(valid_nice_shape(n3));
    // min_fill on a 4-leaf star also branches
    const Graph star = gen_star(5);
    const NiceDecomposition n4 = to_nice(min_fill_decomposition(star));
    CHECK(count_kind(n4, NiceNode::Kind::join) >= 2);
}

TEST_CASE("solve_dp hand examples") {
    const Graph p4 = path_graph(4);
    const ExactResult r1 =
        solve_dp(p4, to_nice(min_fill_decomposition(p4)), 2);
    CHECK(r1.opt_value == 4);
    CHECK(ioa_naive(p4, r1.witness) == 4);

    const Graph star = gen_star(6);
    const ExactResult r2 =
        solve_dp(star, to_nice(min_fill_decomposition(star)), 1);
    CHECK(r2.opt_value == 6);
    CHECK(r2.witness.k == 1);
}

TEST_CASE("solve_dp equals brute force on random graphs") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 25; ++trial) {
        const Graph g = gen_gnp(10, 0.25, rng());
        const auto nd = to_nice(min_fill_decomposition(g));
        for (int k = 0; k <= 5; ++k) {
            const ExactResult dp = solve_dp(g, nd, k);
            const ExactResult bf = brute_force_opt(g, k);
            REQUIRE(dp.opt_value == bf.opt_value);
            CHECK(ioa_naive(g, dp.witness) == dp.opt_value);
            CHECK(dp.witness.k == k);
        }
    }
}

TEST_CASE("solve_dp handles disconnected graphs") {
    // two disjoint edges plus an isolated vertex
    const Graph g = build_graph(5, {{0, 1}, {2, 3}});
    const auto nd = to_nice(min_fill_decomposition(g));
    for (int k = 0; k <= 2; ++k)
        CHECK(solve_dp(g, nd, k).opt_value == brute_force_opt(g, k).opt_value);
}

TEST_CASE("dp_profile matches per-budget solve_dp") {
    const Graph g = gen_gnp(9, 0.3, 2);
    const auto nd = to_nice(min_fill_decomposition(g));
    const auto profile = dp_profile(g, nd, 4);
    REQUIRE(profile.size() == 5);
    for (int k = 0; k <= 4; ++k) {
        CHECK(profile[k].value == solve_dp(g, nd, k).opt_value);
        CHECK(ioa_naive(g, profile[k].witness) == profile[k].value);
    }
}

TEST_CASE("width and memory guards") {
    const Graph k12 = clique_graph(12);
    const auto nd = to_nice(min_fill_decomposition(k12));
    DpLimits limits;
    limits.width_guard = 8;
    // guard trips map to the budget/guard error class (CLI exit code 3)
    CHECK_THROWS_AS(solve_dp(k12, nd, 3, limits), budget_error);

    DpLimits tiny;
    tiny.memory_cap = 1;
    const Graph p4 = path_graph(4);
    CHECK_THROWS_AS(
        solve_dp(p4, to_nice(min_fill_decomposition(p4)), 2, tiny),
        budget_error);
}

TEST_CASE("naive_dp_fails: credit-free DP is wrong, credited DP is right") {
    // On a single edge the credit-free DP already fails: the first endpoint's
    // integrated status is fixed before its neighbor exists in the subtree.
    bool found_mismatch = false;
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 20 && !found_mismatch; ++trial) {
        const Graph g = trial == 0 ? build_graph(2, {{0, 1}})
                                   : gen_gnp(7, 0.3, rng());
        const auto nd = to_nice(min_fill_decomposition(g));
        for (int k = 0; k <= g.n / 2; ++k) {
            NaiveDp naive{g, nd};
            const int nv = naive.solve(k);
            const int credited = solve_dp(g, nd, k).opt_value;
            REQUIRE(credited == brute_force_opt(g, k).opt_value);
            if (nv != credited) found_mismatch = true;
        }
    }
    CHECK(found_mismatch);
}

TEST_CASE("decomposition JSON round-trip") {
    const Graph g = cycle_graph(5);
    const TreeDecomposition td = min_fill_decomposition(g);
    const TreeDecomposition back = decomposition_from_json(decomposition_to_json(td));
    CHECK(back.bags == td.bags);
    CHECK(back.tree_edges == td.tree_edges);
    CHECK(validate_decomposition(g, back));
}
