#ifndef IMIOA_PLANAR_HPP
#define IMIOA_PLANAR_HPP

#include "imioa/assignment.hpp"
#include "imioa/graph.hpp"
#include "imioa/treewidth.hpp"

namespace imioa {

struct BakerPartition {
    int r = 1;                              // offset in 1..q
    int q = 2;
    std::vector<std::vector<int>> stripes;  // vertex sets, outermost first
};

// Groups layers into stripes: the first stripe takes layers 1..r, every
// following stripe the next q layers (the tail is whatever remains). Edges
// never skip a stripe because they span at most one layer.
BakerPartition baker_partition(const LayerStructure& layers, int q, int r);

// Parses {"layers": [[v,...],...]} for graphs with an externally known
// embedding.
LayerStructure layers_from_json(const std::string& text, int n);

// Baker-style (1 - epsilon)-approximation with q = 2*ceil(1/epsilon):
// for each offset r, drops cross-stripe edges, solves every stripe subgraph
// exactly by the treewidth DP, spends the global budget k across stripes by
// an exact knapsack over per-stripe (budget -> value) curves, and returns the
// assignment with the best objective over all offsets. epsilon >= 1 is
// allowed and gives the coarsest stripes (q = 2).
Assignment ptas(const Graph& g, const LayerStructure& layers, int k,
                double epsilon, const DpLimits& limits = {});

} // namespace imioa

#endif
