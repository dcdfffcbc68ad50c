#ifndef IMIOA_EXACT_HPP
#define IMIOA_EXACT_HPP

#include "imioa/assignment.hpp"
#include "imioa/graph.hpp"

namespace imioa {

inline constexpr long long kDefaultEnumBudget = 5'000'000;

struct ExactResult {
    int opt_value = 0;
    Assignment witness;
    long long nodes_explored = 0;
};

// Exact maximum objective over all k-subsets, by colexicographic enumeration
// with an upper-bound prune. Throws budget_error when C(n,k) exceeds budget.
ExactResult brute_force_opt(const Graph& g, int k,
                            long long budget = kDefaultEnumBudget);

// True iff some assignment with k type-1 vertices integrates every vertex.
bool is_k_coverable(const Graph& g, int k,
                    long long budget = kDefaultEnumBudget);

// Smallest k >= 1 for which the graph is k-coverable; equals the domination
// number. Requires no isolated vertices (they can never be covered).
int min_dominating_set_size_via_coverability(const Graph& g,
                                             long long budget = kDefaultEnumBudget);

std::string exact_result_to_json(const ExactResult& r);

} // namespace imioa

#endif
