#ifndef IMIOA_LOCAL_SEARCH_HPP
#define IMIOA_LOCAL_SEARCH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "imioa/assignment.hpp"
#include "imioa/graph.hpp"

namespace imioa {

struct SwapStep {
    int u = 0;
    int v = 0;
    int delta = 0;      // always >= 1: only strict improvements are applied
    int ioa_after = 0;
};

struct SearchTrace {
    std::vector<SwapStep> swaps;
    int initial_ioa = 0;
    int final_ioa = 0;
};

// One JSON object per swap: {"u":..,"v":..,"delta":..,"ioa":..}
std::string trace_to_jsonl(const SearchTrace& t);

// Pairwise-swap local improvement. Starts from the seed-determined random
// assignment and repeatedly applies the first strictly improving swap,
// scanning u ascending over type-1 and v ascending over type-2 vertices,
// restarting the scan after each applied swap. The result is saturated.
std::pair<Assignment, SearchTrace> local_improvement(const Graph& g, int k,
                                                     std::uint64_t seed);

// Same search from a caller-provided start.
std::pair<Assignment, SearchTrace> local_improvement_from(const Graph& g,
                                                          Assignment start);

// True iff no type-1/type-2 swap strictly increases the objective.
bool is_saturated(const Graph& g, const Assignment& a);

// Baseline: start all type-2, then k replacements each maximizing the
// objective increase, ties broken by lowest vertex id.
Assignment greedy(const Graph& g, int k);

// Baseline: uniformly random k-subset is type-1 under the seed.
Assignment random_assignment(const Graph& g, int k, std::uint64_t seed);

} // namespace imioa

#endif
