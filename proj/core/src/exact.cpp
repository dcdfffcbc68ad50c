#include "imioa/exact.hpp"

#include <algorithm>
#include <sstream>

#include "imioa/errors.hpp"

namespace imioa {

namespace {

long long binom_clamped(int n, int k, long long clamp) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > clamp) return clamp + 1;
    }
    return r;
}

struct Search {
    const Graph& g;
    int stop_at;                 // unwind once best reaches this value
    std::vector<std::uint8_t> types;
    std::vector<int> min_closed; // min id in the closed neighborhood
    int best = -1;
    std::vector<std::uint8_t> best_types;
    long long nodes = 0;

    Search(const Graph& g_, int stop_at_) : g(g_), stop_at(stop_at_) {
        types.assign(g.n, 2);
        min_closed.assign(g.n, 0);
        for (int v = 0; v < g.n; ++v)
            min_closed[v] =
                g.adjacency[v].empty() ? v : std::min(v, g.adjacency[v][0]);
    }

    int evaluate() const {
        int count = 0;
        for (int v = 0; v < g.n; ++v)
            for (int u : g.adjacency[v])
                if (types[u] != types[v]) {
                    ++count;
                    break;
                }
        return count;
    }

    // Vertices above `limit` are decided; any of them whose whole closed
    // neighborhood is decided and uniform can never become integrated.
    int upper_bound(int limit) const {
        int dead = 0;
        for (int w = limit + 1; w < g.n; ++w) {
            if (min_closed[w] <= limit) continue;
            bool uniform = true;
            for (int u : g.adjacency[w])
                if (types[u] != types[w]) {
                    uniform = false;
                    break;
                }
            dead += uniform || g.adjacency[w].empty();
        }
        return g.n - dead;
    }

    // Colexicographic k-subsets: place the largest remaining element first.
    void recurse(int r, int limit) {
        ++nodes;
        if (best >= stop_at) return;
        if (r == 0) {
            const int value = evaluate();
            if (value > best) {
                best = value;
                best_types = types;
            }
            return;
        }
        if (upper_bound(limit) <= best) return;
        for (int c = r - 1; c <= limit; ++c) {
            types[c] = 1;
            recurse(r - 1, c - 1);
            types[c] = 2;
            if (best >= stop_at) return;
        }
    }
};

ExactResult run_search(const Graph& g, int k, long long budget, int stop_at) {
    if (k < 0 || k > g.n) throw precondition_error("exact: k out of range");
    if (binom_clamped(g.n, k, budget) > budget)
        throw budget_error("exact: C(n,k) exceeds enumeration budget");
    Search s(g, stop_at);
    s.recurse(k, g.n - 1);
    ExactResult res;
    res.opt_value = s.best;
    res.witness.types = std::move(s.best_types);
    res.witness.k = k;
    res.nodes_explored = s.nodes;
    return res;
}

} // namespace

ExactResult brute_force_opt(const Graph& g, int k, long long budget) {
    return run_search(g, k, budget, g.n + 1);
}

bool is_k_coverable(const Graph& g, int k, long long budget) {
    return run_search(g, k, budget, g.n).opt_value == g.n;
}

int min_dominating_set_size_via_coverability(const Graph& g, long long budget) {
    for (int v = 0; v < g.n; ++v)
        if (g.adjacency[v].empty())
            throw precondition_error("coverability: isolated vertex present");
    for (int k = 1; k <= g.n; ++k)
        if (is_k_coverable(g, k, budget)) return k;
    throw precondition_error("coverability: no covering assignment exists");
}

std::string exact_result_to_json(const ExactResult& r) {
    std::ostringstream out;
    out << "{\"opt\":" << r.opt_value << ",\"nodes\":" << r.nodes_explored
        << ",\"witness\":" << assignment_to_json(r.witness) << "}";
    return out.str();
}

} // namespace imioa
