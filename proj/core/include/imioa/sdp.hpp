#ifndef IMIOA_SDP_HPP
#define IMIOA_SDP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "imioa/assignment.hpp"
#include "imioa/graph.hpp"

namespace imioa {

// Unit vectors y_i, one per vertex.
struct SdpEmbedding {
    int d = 0;
    std::vector<std::vector<double>> vectors;
};

struct SdpConfig {
    int d = 0;                    // 0 = auto: ceil(sqrt(2n)) + 1
    int max_iters = 400;
    double step_size = 0.2;
    double penalty_weight = 4.0;
    double tolerance = 1e-7;      // feasibility threshold: gap <= tolerance*n^2
    int restarts = 3;
};

struct SdpSolveInfo {
    bool feasible_found = false;  // best tracked iterate met the gap threshold
    double objective = 0.0;
    double gap = 0.0;
};

struct RoundedPartition {
    std::vector<int> v1;
    std::vector<int> v2;
    std::uint64_t normal_seed = 0;
};

// sum_i max_{j in N(i)} (1 - y_i . y_j) / 2; isolated vertices contribute 0.
double sdp_objective(const Graph& g, const SdpEmbedding& e);

// sum_{i<j} y_i . y_j - ((1-2a)^2 n^2 - n) / 2. Feasible iff <= 0.
double constraint_gap(const SdpEmbedding& e, double alpha);

// Low-rank heuristic solver: projected subgradient ascent on the temperature-
// annealed soft-max objective with a quadratic penalty on the constraint gap,
// renormalizing every step; tracks the best feasible iterate across restarts
// (restart 0 is a balanced integral warm start, which is always feasible).
// Global optimality is NOT claimed.
SdpEmbedding solve_relaxation(const Graph& g, double alpha, const SdpConfig& cfg,
                              std::uint64_t seed, SdpSolveInfo* info = nullptr);

// Goemans-Williamson rounding: v1 = {i : y_i . r >= 0} for a standard-normal r.
RoundedPartition hyperplane_round(const SdpEmbedding& e, std::uint64_t seed);

// Greedy repair: |v1| - k moves from the type-1 side, each maximizing the
// retained objective (ties: lowest id). Requires |v1| >= k.
Assignment fix_size(const Graph& g, const RoundedPartition& part, int k);

// Instrumented variant: records (objective, |V1|) after every move,
// including the starting point.
Assignment fix_size_traced(const Graph& g, const RoundedPartition& part, int k,
                           std::vector<std::pair<int, int>>* trace);

// Full pipeline: one relaxation solve, L = ceil(log_a(1/epsilon)) independent
// round+fix iterations, best objective wins. Requires alpha*n integral.
Assignment sdp_algorithm(const Graph& g, double alpha, double epsilon,
                         std::uint64_t seed, const SdpConfig& cfg = {});

// Number of rounding iterations the pipeline runs.
int sdp_restart_count(double alpha, double epsilon);

// Closed-form guarantee of the pipeline at (alpha, epsilon).
double theoretical_ratio(double alpha, double epsilon);

inline constexpr double kAlphaGW = 0.878567;

// Feasible integral embedding: first coordinate +1 for type 1, -1 for type 2.
SdpEmbedding integral_embedding(const Assignment& a, int d = 2);

std::string embedding_to_json(const SdpEmbedding& e);

} // namespace imioa

#endif
