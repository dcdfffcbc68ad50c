#include "imioa/assignment.hpp"

#include <algorithm>
#include <sstream>

#include "imioa/errors.hpp"

namespace imioa {

Assignment make_assignment(int n, const std::vector<int>& type1) {
    Assignment a;
    a.types.assign(n, 2);
    for (int v : type1) {
        if (v < 0 || v >= n) throw precondition_error("type-1 id out of range");
        if (a.types[v] == 1) throw precondition_error("duplicate type-1 id");
        a.types[v] = 1;
    }
    a.k = static_cast<int>(type1.size());
    return a;
}

std::vector<int> type1_vertices(const Assignment& a) {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(a.types.size()); ++v)
        if (a.types[v] == 1) out.push_back(v);
    return out;
}

bool validate_assignment(const Assignment& a) {
    int k = 0;
    for (auto t : a.types) {
        if (t != 1 && t != 2) return false;
        if (t == 1) ++k;
    }
    return k == a.k;
}

std::string assignment_to_json(const Assignment& a) {
    std::ostringstream out;
    out << "{\"k\":" << a.k << ",\"types\":[";
    for (std::size_t i = 0; i < a.types.size(); ++i) {
        if (i) out << ',';
        out << static_cast<int>(a.types[i]);
    }
    out << "]}";
    return out.str();
}

static void check_lengths(const Graph& g, const Assignment& a) {
    if (static_cast<int>(a.types.size()) != g.n)
        throw precondition_error("assignment length != vertex count");
}

int ioa_naive(const Graph& g, const Assignment& a) {
    check_lengths(g, a);
    int count = 0;
    for (int v = 0; v < g.n; ++v)
        for (int u : g.adjacency[v])
            if (a.types[u] != a.types[v]) {
                ++count;
                break;
            }
    return count;
}

IoACache build_cache(const Graph& g, const Assignment& a) {
    check_lengths(g, a);
    IoACache c;
    c.opp_count.assign(g.n, 0);
    c.k = a.k;
    for (int v = 0; v < g.n; ++v) {
        int opp = 0;
        for (int u : g.adjacency[v])
            if (a.types[u] != a.types[v]) ++opp;
        c.opp_count[v] = opp;
        if (opp > 0) ++c.ioa;
    }
    return c;
}

namespace {

// Shared by swap_delta / apply_swap: integrated-status changes of
// {u,v} u N(u) u N(v) when u (type 1) and v (type 2) trade types.
// Emits (w, new_opp_count) pairs for every vertex whose count changes.
int swap_changes(const Graph& g, const Assignment& a, const IoACache& cache,
                 int u, int v, std::vector<std::pair<int, int>>& out) {
    if (u < 0 || v < 0 || u >= g.n || v >= g.n)
        throw precondition_error("swap: vertex id out of range");
    if (a.types[u] != 1 || a.types[v] != 2)
        throw precondition_error("swap: need types[u]=1, types[v]=2");
    out.clear();
    int delta = 0;
    // neighbor adjustments: u's flip 1->2 raises w's opposite-count iff w is
    // type 1, v's flip 2->1 iff w is type 2; the u-v edge itself nets zero.
    std::vector<std::pair<int, int>> adj;
    for (int w : g.adjacency[u])
        if (w != v) adj.emplace_back(w, a.types[w] == 1 ? 1 : -1);
    for (int w : g.adjacency[v])
        if (w != u) adj.emplace_back(w, a.types[w] == 2 ? 1 : -1);
    std::sort(adj.begin(), adj.end());
    for (std::size_t i = 0; i < adj.size();) {
        const int w = adj[i].first;
        int d = 0;
        for (; i < adj.size() && adj[i].first == w; ++i) d += adj[i].second;
        const int new_opp = cache.opp_count[w] + d;
        delta += (new_opp > 0) - (cache.opp_count[w] > 0);
        out.emplace_back(w, new_opp);
    }
    // the swapped pair: rescan their neighborhoods under the new types
    for (int x : {u, v}) {
        const int new_type = (x == u) ? 2 : 1;
        int opp = 0;
        for (int w : g.adjacency[x]) {
            int tw = a.types[w];
            if (w == u) tw = 2;
            if (w == v) tw = 1;
            if (tw != new_type) ++opp;
        }
        delta += (opp > 0) - (cache.opp_count[x] > 0);
        out.emplace_back(x, opp);
    }
    return delta;
}

} // namespace

int swap_delta(const Graph& g, const Assignment& a, const IoACache& cache,
               int u, int v) {
    std::vector<std::pair<int, int>> changes;
    return swap_changes(g, a, cache, u, v, changes);
}

void apply_swap(IoACache& cache, const Graph& g, Assignment& a, int u, int v) {
    std::vector<std::pair<int, int>> changes;
    const int delta = swap_changes(g, a, cache, u, v, changes);
    for (auto [w, new_opp] : changes) cache.opp_count[w] = new_opp;
    a.types[u] = 2;
    a.types[v] = 1;
    cache.ioa += delta;
}

std::pair<std::vector<int>, std::vector<int>> uncovered_sets(const Graph& g,
                                                             const Assignment& a) {
    check_lengths(g, a);
    std::vector<int> z1, z2;
    for (int v = 0; v < g.n; ++v) {
        bool covered = false;
        for (int u : g.adjacency[v])
            if (a.types[u] != a.types[v]) {
                covered = true;
                break;
            }
        if (!covered) (a.types[v] == 1 ? z1 : z2).push_back(v);
    }
    return {z1, z2};
}

std::vector<int> unique_cover_set(const Graph& g, const Assignment& a, int x) {
    check_lengths(g, a);
    if (x < 0 || x >= g.n) throw precondition_error("vertex id out of range");
    IoACache c = build_cache(g, a);
    std::vector<int> out;
    for (int y : g.adjacency[x])
        if (a.types[y] != a.types[x] && c.opp_count[y] == 1) out.push_back(y);
    return out;
}

FlipStatsCache build_flip_stats(const Graph& g, const Assignment& a) {
    check_lengths(g, a);
    IoACache c = build_cache(g, a);
    FlipStatsCache fs;
    fs.sn.assign(g.n, 0);
    fs.in1_1.assign(g.n, 0);
    fs.in1_2.assign(g.n, 0);
    fs.is.assign(g.n, 0);
    for (int v = 0; v < g.n; ++v) {
        for (int u : g.adjacency[v]) {
            if (c.opp_count[u] == 0) ++fs.sn[v];
            if (c.opp_count[u] == 1) ++(a.types[u] == 1 ? fs.in1_1 : fs.in1_2)[v];
        }
        if (c.opp_count[v] == 0)
            fs.is[v] = 1;                                  // segregated
        else if (c.opp_count[v] == g.degree(v))
            fs.is[v] = -1;                                 // fully integrated
        else
            fs.is[v] = 0;                                  // partly integrated
    }
    return fs;
}

int flip_delta_hypothesis(const Graph& g, const Assignment& a,
                          const FlipStatsCache& fs, int x) {
    check_lengths(g, a);
    if (x < 0 || x >= g.n) throw precondition_error("vertex id out of range");
    const int in1_opposite = (a.types[x] == 1) ? fs.in1_2[x] : fs.in1_1[x];
    return fs.sn[x] - in1_opposite + fs.is[x];
}

} // namespace imioa
