#include "imioa/local_search.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "imioa/errors.hpp"
#include "imioa/rng.hpp"

namespace imioa {

std::string trace_to_jsonl(const SearchTrace& t) {
    std::ostringstream out;
    for (const auto& s : t.swaps)
        out << "{\"u\":" << s.u << ",\"v\":" << s.v << ",\"delta\":" << s.delta
            << ",\"ioa\":" << s.ioa_after << "}\n";
    return out.str();
}

std::pair<Assignment, SearchTrace> local_improvement_from(const Graph& g,
                                                          Assignment a) {
    IoACache cache = build_cache(g, a);
    SearchTrace trace;
    trace.initial_ioa = cache.ioa;
    bool improved = true;
    while (improved) {
        improved = false;
        for (int u = 0; u < g.n && !improved; ++u) {
            if (a.types[u] != 1) continue;
            for (int v = 0; v < g.n; ++v) {
                if (a.types[v] != 2) continue;
                const int d = swap_delta(g, a, cache, u, v);
                if (d > 0) {
                    apply_swap(cache, g, a, u, v);
                    trace.swaps.push_back({u, v, d, cache.ioa});
                    improved = true;
                    break;
                }
            }
        }
    }
    trace.final_ioa = cache.ioa;
    return {std::move(a), std::move(trace)};
}

std::pair<Assignment, SearchTrace> local_improvement(const Graph& g, int k,
                                                     std::uint64_t seed) {
    return local_improvement_from(g, random_assignment(g, k, seed));
}

bool is_saturated(const Graph& g, const Assignment& a) {
    IoACache cache = build_cache(g, a);
    for (int u = 0; u < g.n; ++u) {
        if (a.types[u] != 1) continue;
        for (int v = 0; v < g.n; ++v) {
            if (a.types[v] != 2) continue;
            if (swap_delta(g, a, cache, u, v) > 0) return false;
        }
    }
    return true;
}

namespace {

// Objective change of turning type-2 vertex c into type 1.
int promote_gain(const Graph& g, const Assignment& a, const IoACache& cache,
                 int c) {
    int delta = 0;
    bool c_integrated = false;
    for (int w : g.adjacency[c]) {
        if (a.types[w] == 2) c_integrated = true;
        const int new_opp = cache.opp_count[w] + (a.types[w] == 2 ? 1 : -1);
        delta += (new_opp > 0) - (cache.opp_count[w] > 0);
    }
    delta += c_integrated - (cache.opp_count[c] > 0);
    return delta;
}

} // namespace

Assignment greedy(const Graph& g, int k) {
    if (k < 0 || k > g.n) throw precondition_error("greedy: k out of range");
    Assignment a;
    a.types.assign(g.n, 2);
    a.k = 0;
    IoACache cache = build_cache(g, a);
    for (int step = 0; step < k; ++step) {
        int best = -1, best_gain = 0;
        for (int c = 0; c < g.n; ++c) {
            if (a.types[c] != 2) continue;
            const int gain = promote_gain(g, a, cache, c);
            if (best == -1 || gain > best_gain) {
                best = c;
                best_gain = gain;
            }
        }
        a.types[best] = 1;
        ++a.k;
        cache = build_cache(g, a);
    }
    return a;
}

Assignment random_assignment(const Graph& g, int k, std::uint64_t seed) {
    if (k < 0 || k > g.n) throw precondition_error("random: k out of range");
    rng::engine e(seed);
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    // partial Fisher-Yates: the first k slots are a uniform k-subset
    for (int i = 0; i < k; ++i) {
        const int j = i + static_cast<int>(rng::next_below(e, g.n - i));
        std::swap(perm[i], perm[j]);
    }
    perm.resize(k);
    return make_assignment(g.n, perm);
}

} // namespace imioa
