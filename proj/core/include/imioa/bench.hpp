#ifndef IMIOA_BENCH_HPP
#define IMIOA_BENCH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "imioa/assignment.hpp"
#include "imioa/graph.hpp"

namespace imioa {

// One result row. mu = objective/n; gamma = objective/OPT, present only when
// an exact optimum was actually computed.
struct RunRecord {
    std::string graph_descr;
    int n = 0;
    long long m = 0;
    int k = 0;
    std::string algorithm;
    std::uint64_t seed = 0;
    int objective = 0;
    double mu = 0.0;
    std::optional<double> gamma;
    double wall_ms = 0.0;
    std::map<std::string, std::string> extra;  // values are JSON literals
};

std::string record_to_json(const RunRecord& r);   // one JSON-lines row
std::string csv_header();
std::string record_to_csv(const RunRecord& r);

struct SolveOptions {
    std::string algorithm;         // local|greedy|random|sdp|twdp|ptas|grid-5p|grid-full
    int k = -1;
    double alpha = -1.0;           // sdp route
    double epsilon = 0.5;          // sdp / ptas routes
    long long budget = 5'000'000;  // exact-oracle budget (gamma computation)
    int width_guard = 8;           // twdp / ptas routes
    int board_a = 0, board_b = 0;  // grid routes
    const LayerStructure* layers = nullptr;  // ptas route
    bool with_gamma = false;       // compute OPT and attach gamma
};

// Runs one algorithm once; the reported objective is always re-verified by
// ioa_naive on the returned assignment.
RunRecord run_solver(const Graph& g, const std::string& descr,
                     const SolveOptions& opts, std::uint64_t seed);

// Fans seeds out across a worker pool (INTEGRATION_MAX_THREADS caps it);
// records come back in seed order regardless of scheduling.
std::vector<RunRecord> run_seeds(const Graph& g, const std::string& descr,
                                 const SolveOptions& opts,
                                 const std::vector<std::uint64_t>& seeds);

int max_threads_from_env();

} // namespace imioa

#endif
