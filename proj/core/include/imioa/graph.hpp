#ifndef IMIOA_GRAPH_HPP
#define IMIOA_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace imioa {

// Undirected simple graph. Vertex ids are dense 0..n-1; neighbor lists are
// kept sorted ascending so iteration order is deterministic everywhere.
struct Graph {
    int n = 0;
    long long m = 0;
    std::vector<std::vector<int>> adjacency;

    int degree(int v) const { return static_cast<int>(adjacency[v].size()); }
    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const { return adjacency[v]; }
};

// Builds a graph from an edge list; throws precondition_error on self-loops,
// duplicate edges, or out-of-range ids.
Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

// Checks simplicity (no loops/duplicates) and adjacency symmetry.
bool validate_graph(const Graph& g);

// Edge-list text format: lines "u v", '#' comments and blank lines ignored.
// Vertices are 0..max_id. Malformed lines are reported with their number.
Graph parse_edge_list(const std::string& text);
std::string write_edge_list(const Graph& g);          // sorted lines, u < v
std::string graph_to_json(const Graph& g);            // {"n":int,"edges":[[u,v],...]}

// ---- generators ------------------------------------------------------------

// Erdos-Renyi: each of the C(n,2) edges appears independently with
// probability p under the seed.
Graph gen_gnp(int n, double p, std::uint64_t seed);

// Barabasi-Albert preferential attachment. Starts from a clique on `attach`
// vertices; each later vertex attaches to `attach` distinct existing
// vertices sampled proportionally to degree (ties broken by the PRNG).
Graph gen_ba(int n, int attach, std::uint64_t seed);

// a x b lattice with 4-neighbor adjacency, row-major vertex ids.
Graph gen_grid(int a, int b);

// One center (id 0) adjacent to n-1 leaves.
Graph gen_star(int n);

// Worst-case instance for the pairwise-swap local search, k >= 2:
//   - clique W1 = {0..k-1};
//   - for each v in W1 a set U_v of k pendants attached to v;
//   - a hub w adjacent to every pendant and to clique vertex 0;
//   - k stars of k-1 vertices each, star s's center attached to U_{v_s}[0]
//     for distinct v_s.
// Total n = k^2 + k + 1 + k(k-1).
Graph gen_tight(int k);
// Vertex-role helpers for the tight instance (ids by construction order).
std::vector<int> tight_clique(int k);                  // W1
int tight_hub(int k);                                  // w
std::vector<int> tight_star_centers(int k);

// Disjoint union used by the bisection-hardness reduction: base graph
// (n vertices), a path of k-1 vertices each carrying one pendant (2k-2
// vertices), and a star on n-2k+2 vertices. Total 2n vertices. Requires
// k >= 2 and n >= 2k - 1.
Graph gen_bisection_gadget(const Graph& base, int k);

// ---- planar layering -------------------------------------------------------

struct LayerStructure {
    std::vector<std::vector<int>> layers;  // layers[0] = declared boundary
    std::vector<int> layer_of;             // 1-based layer index per vertex
};

// Peels the graph from an explicit boundary: layer 1 is the boundary, layer
// i+1 the unassigned neighbors of layer i. Throws if a boundary id is out of
// range or some vertex is never reached.
LayerStructure layering(const Graph& g, const std::vector<int>& boundary);

// Perimeter cells of gen_grid(a, b), the boundary layering expects.
std::vector<int> grid_boundary(int a, int b);

} // namespace imioa

#endif
