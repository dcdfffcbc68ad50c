#include "imioa/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "imioa/errors.hpp"
#include "imioa/rng.hpp"

namespace imioa {

bool Graph::has_edge(int u, int v) const {
    const auto& a = adjacency[u];
    return std::binary_search(a.begin(), a.end(), v);
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw precondition_error("negative vertex count");
    Graph g;
    g.n = n;
    g.adjacency.assign(n, {});
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw precondition_error("edge endpoint out of range");
        if (u == v) throw precondition_error("self-loop rejected");
        auto key = std::minmax(u, v);
        if (!seen.insert({key.first, key.second}).second)
            throw precondition_error("duplicate edge rejected");
        g.adjacency[u].push_back(v);
        g.adjacency[v].push_back(u);
    }
    for (auto& nb : g.adjacency) std::sort(nb.begin(), nb.end());
    g.m = static_cast<long long>(seen.size());
    return g;
}

bool validate_graph(const Graph& g) {
    if (g.n != static_cast<int>(g.adjacency.size())) return false;
    long long half_edges = 0;
    for (int u = 0; u < g.n; ++u) {
        const auto& nb = g.adjacency[u];
        if (!std::is_sorted(nb.begin(), nb.end())) return false;
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) return false;
        for (int v : nb) {
            if (v < 0 || v >= g.n || v == u) return false;
            if (!g.has_edge(v, u)) return false;
        }
        half_edges += static_cast<long long>(nb.size());
    }
    return half_edges == 2 * g.m;
}

Graph parse_edge_list(const std::string& text) {
    std::vector<std::pair<int, int>> edges;
    int max_id = -1;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        long long u, v;
        std::string tail;
        if (!(ls >> u >> v) || (ls >> tail) || u < 0 || v < 0)
            throw precondition_error("malformed edge-list line " +
                                     std::to_string(line_no));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        max_id = std::max({max_id, static_cast<int>(u), static_cast<int>(v)});
    }
    return build_graph(max_id + 1, edges);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adjacency[u])
            if (u < v) out << u << ' ' << v << '\n';
    return out.str();
}

std::string graph_to_json(const Graph& g) {
    std::ostringstream out;
    out << "{\"n\":" << g.n << ",\"edges\":[";
    bool first = true;
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adjacency[u])
            if (u < v) {
                if (!first) out << ',';
                first = false;
                out << '[' << u << ',' << v << ']';
            }
    out << "]}";
    return out.str();
}

Graph gen_gnp(int n, double p, std::uint64_t seed) {
    if (n < 0 || p < 0.0 || p > 1.0)
        throw precondition_error("gnp: need n >= 0 and p in [0,1]");
    rng::engine e(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng::next_unit(e) < p) edges.emplace_back(u, v);
    return build_graph(n, edges);
}

Graph gen_ba(int n, int attach, std::uint64_t seed) {
    if (attach < 1 || attach >= n)
        throw precondition_error("ba: need 1 <= attach < n");
    rng::engine e(seed);
    std::vector<std::pair<int, int>> edges;
    // endpoint multiset: every edge contributes both endpoints, so sampling
    // an index uniformly samples vertices proportionally to degree
    std::vector<int> endpoints;
    for (int u = 0; u < attach; ++u)
        for (int v = u + 1; v < attach; ++v) {
            edges.emplace_back(u, v);
            endpoints.push_back(u);
            endpoints.push_back(v);
        }
    for (int t = attach; t < n; ++t) {
        std::vector<int> picked;
        while (static_cast<int>(picked.size()) < attach) {
            int c;
            if (endpoints.empty()) {
                // attach == 1 starts with a single isolated vertex
                c = static_cast<int>(rng::next_below(e, t));
            } else {
                c = endpoints[rng::next_below(e, endpoints.size())];
            }
            if (std::find(picked.begin(), picked.end(), c) == picked.end())
                picked.push_back(c);
        }
        for (int c : picked) {
            edges.emplace_back(c, t);
            endpoints.push_back(c);
            endpoints.push_back(t);
        }
    }
    return build_graph(n, edges);
}

Graph gen_grid(int a, int b) {
    if (a < 1 || b < 1) throw precondition_error("grid: need a, b >= 1");
    auto id = [b](int r, int c) { return r * b + c; };
    std::vector<std::pair<int, int>> edges;
    for (int r = 0; r < a; ++r)
        for (int c = 0; c < b; ++c) {
            if (c + 1 < b) edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < a) edges.emplace_back(id(r, c), id(r + 1, c));
        }
    return build_graph(a * b, edges);
}

Graph gen_star(int n) {
    if (n < 1) throw precondition_error("star: need n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    return build_graph(n, edges);
}

Graph gen_tight(int k) {
    if (k < 2) throw precondition_error("tight: need k >= 2");
    const int n = k * k + k + 1 + k * (k - 1);
    std::vector<std::pair<int, int>> edges;
    // clique W1 = 0..k-1
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) edges.emplace_back(u, v);
    // pendant blocks U_v
    auto pendant = [k](int v, int j) { return k + v * k + j; };
    for (int v = 0; v < k; ++v)
        for (int j = 0; j < k; ++j) edges.emplace_back(v, pendant(v, j));
    // hub w: adjacent to every pendant and to the lowest-id clique vertex
    const int w = k + k * k;
    for (int v = 0; v < k; ++v)
        for (int j = 0; j < k; ++j) edges.emplace_back(w, pendant(v, j));
    edges.emplace_back(w, 0);
    // k stars of k-1 vertices; star s's center hangs off U_s's first pendant
    for (int s = 0; s < k; ++s) {
        const int center = w + 1 + s * (k - 1);
        edges.emplace_back(center, pendant(s, 0));
        for (int l = 1; l < k - 1; ++l) edges.emplace_back(center, center + l);
    }
    Graph g = build_graph(n, edges);
    return g;
}

std::vector<int> tight_clique(int k) {
    std::vector<int> w1(k);
    for (int i = 0; i < k; ++i) w1[i] = i;
    return w1;
}

int tight_hub(int k) { return k + k * k; }

std::vector<int> tight_star_centers(int k) {
    std::vector<int> centers(k);
    for (int s = 0; s < k; ++s) centers[s] = k + k * k + 1 + s * (k - 1);
    return centers;
}

Graph gen_bisection_gadget(const Graph& base, int k) {
    const int n = base.n;
    if (k < 2) throw precondition_error("bisection_gadget: need k >= 2");
    if (n < 2 * k - 1)
        throw precondition_error("bisection_gadget: need base n >= 2k-1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v : base.adjacency[u])
            if (u < v) edges.emplace_back(u, v);
    // path of k-1 vertices, each with a pendant: ids n+2i (path), n+2i+1
    auto path_v = [n](int i) { return n + 2 * i; };
    for (int i = 0; i < k - 1; ++i) {
        if (i + 1 < k - 1) edges.emplace_back(path_v(i), path_v(i + 1));
        edges.emplace_back(path_v(i), path_v(i) + 1);
    }
    // star on n-2k+2 vertices
    const int center = n + 2 * (k - 1);
    for (int l = 1; l < n - 2 * k + 2; ++l) edges.emplace_back(center, center + l);
    return build_graph(2 * n, edges);
}

LayerStructure layering(const Graph& g, const std::vector<int>& boundary) {
    if (boundary.empty()) throw precondition_error("layering: empty boundary");
    LayerStructure ls;
    ls.layer_of.assign(g.n, 0);
    std::vector<int> frontier;
    for (int v : boundary) {
        if (v < 0 || v >= g.n)
            throw precondition_error("layering: boundary id out of range");
        if (ls.layer_of[v] == 0) {
            ls.layer_of[v] = 1;
            frontier.push_back(v);
        }
    }
    std::sort(frontier.begin(), frontier.end());
    int assigned = static_cast<int>(frontier.size());
    int layer = 1;
    while (!frontier.empty()) {
        ls.layers.push_back(frontier);
        std::vector<int> next;
        for (int v : frontier)
            for (int u : g.adjacency[v])
                if (ls.layer_of[u] == 0) {
                    ls.layer_of[u] = layer + 1;
                    next.push_back(u);
                }
        std::sort(next.begin(), next.end());
        assigned += static_cast<int>(next.size());
        frontier = std::move(next);
        ++layer;
    }
    if (assigned != g.n)
        throw precondition_error("layering: unreachable vertices (disconnected input)");
    return ls;
}

std::vector<int> grid_boundary(int a, int b) {
    if (a < 1 || b < 1) throw precondition_error("grid_boundary: need a, b >= 1");
    std::vector<int> out;
    auto id = [b](int r, int c) { return r * b + c; };
    for (int r = 0; r < a; ++r)
        for (int c = 0; c < b; ++c)
            if (r == 0 || c == 0 || r == a - 1 || c == b - 1)
                out.push_back(id(r, c));
    return out;
}

} // namespace imioa
