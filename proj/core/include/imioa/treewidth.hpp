#ifndef IMIOA_TREEWIDTH_HPP
#define IMIOA_TREEWIDTH_HPP

#include <string>
#include <vector>

#include "imioa/exact.hpp"
#include "imioa/graph.hpp"

namespace imioa {

struct TreeDecomposition {
    std::vector<std::vector<int>> bags;            // each sorted ascending
    std::vector<std::pair<int, int>> tree_edges;
    int width() const;                             // max bag size - 1
};

// Elimination-order decomposition, picking the vertex that adds the fewest
// fill edges at each step (ties: lowest id). Always valid; width is a
// heuristic upper bound on the true treewidth.
TreeDecomposition min_fill_decomposition(const Graph& g);

// All three decomposition invariants: vertex coverage, edge coverage,
// connected subtrees (plus the bags actually forming a tree).
bool validate_decomposition(const Graph& g, const TreeDecomposition& td);

struct NiceNode {
    enum class Kind { leaf, introduce, forget, join };
    Kind kind = Kind::leaf;
    std::vector<int> bag;          // sorted ascending
    std::vector<int> children;     // node ids
    int vertex = -1;               // introduced / forgotten vertex
};

struct NiceDecomposition {
    std::vector<NiceNode> nodes;
    int root = -1;
};

// Rooted nice form: leaves grow their bag by introduce chains, bags shrink /
// grow between tree nodes via forget+introduce chains, multi-way branches
// become binary joins. Width is unchanged.
NiceDecomposition to_nice(const TreeDecomposition& td);

struct DpLimits {
    int width_guard = 8;                       // refuse wider decompositions
    long long memory_cap = 1'000'000'000;      // sum of entries * |Y_i| bits
};

// Exact optimum via the credited dynamic program over states (S, S', gamma):
// S fixes the bag types, S' is the set of bag vertices credited as integrated
// by the outside, gamma is the type-1 budget spent inside the subtree.
// The answer is max over S of the root entry (S, empty, k).
ExactResult solve_dp(const Graph& g, const NiceDecomposition& nd, int k,
                     const DpLimits& limits = {});

// Root read-off for every budget 0..kmax in one DP run; used by the planar
// PTAS knapsack and by disconnected-component composition.
struct DpProfileEntry {
    int value = -1;                // -1: budget infeasible for this subgraph
    Assignment witness;
};
std::vector<DpProfileEntry> dp_profile(const Graph& g,
                                       const NiceDecomposition& nd, int kmax,
                                       const DpLimits& limits = {});

// JSON {"bags": [[v,...],...], "edges": [[i,j],...]}
std::string decomposition_to_json(const TreeDecomposition& td);
TreeDecomposition decomposition_from_json(const std::string& text);

} // namespace imioa

#endif
