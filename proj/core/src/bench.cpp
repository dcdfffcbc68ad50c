#include "imioa/bench.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "imioa/errors.hpp"
#include "imioa/exact.hpp"
#include "imioa/grid.hpp"
#include "imioa/local_search.hpp"
#include "imioa/planar.hpp"
#include "imioa/sdp.hpp"
#include "imioa/treewidth.hpp"

namespace imioa {

std::string record_to_json(const RunRecord& r) {
    nlohmann::json j;
    j["schema"] = 1;
    j["graph"] = r.graph_descr;
    j["n"] = r.n;
    j["m"] = r.m;
    j["k"] = r.k;
    j["algorithm"] = r.algorithm;
    j["seed"] = r.seed;
    j["objective"] = r.objective;
    j["mu"] = r.mu;
    if (r.gamma) j["gamma"] = *r.gamma;
    j["wall_ms"] = r.wall_ms;
    nlohmann::json ex = nlohmann::json::object();
    for (const auto& [key, lit] : r.extra) ex[key] = nlohmann::json::parse(lit);
    j["extra"] = ex;
    return j.dump();
}

std::string csv_header() {
    return "schema,graph,n,m,k,algorithm,seed,objective,mu,gamma,wall_ms,extra";
}

std::string record_to_csv(const RunRecord& r) {
    nlohmann::json ex = nlohmann::json::object();
    for (const auto& [key, lit] : r.extra) ex[key] = nlohmann::json::parse(lit);
    std::ostringstream out;
    out.precision(17);
    auto quote = [](const std::string& s) {
        std::string q = "\"";
        for (char c : s) {
            if (c == '"') q += '"';
            q += c;
        }
        return q + "\"";
    };
    out << 1 << ',' << quote(r.graph_descr) << ',' << r.n << ',' << r.m << ','
        << r.k << ',' << r.algorithm << ',' << r.seed << ',' << r.objective
        << ',' << r.mu << ',';
    if (r.gamma) out << *r.gamma;
    out << ',' << r.wall_ms << ',' << quote(ex.dump());
    return out.str();
}

int max_threads_from_env() {
    if (const char* env = std::getenv("INTEGRATION_MAX_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

RunRecord run_solver(const Graph& g, const std::string& descr,
                     const SolveOptions& opts, std::uint64_t seed) {
    RunRecord rec;
    rec.graph_descr = descr;
    rec.n = g.n;
    rec.m = g.m;
    rec.algorithm = opts.algorithm;
    rec.seed = seed;

    Assignment result;
    const auto t0 = std::chrono::steady_clock::now();
    if (opts.algorithm == "local") {
        auto [a, trace] = local_improvement(g, opts.k, seed);
        rec.extra["swaps"] = std::to_string(trace.swaps.size());
        result = std::move(a);
    } else if (opts.algorithm == "greedy") {
        result = greedy(g, opts.k);
    } else if (opts.algorithm == "random") {
        result = random_assignment(g, opts.k, seed);
    } else if (opts.algorithm == "sdp") {
        if (!(opts.alpha > 0.0))
            throw precondition_error("solve: sdp route needs --alpha");
        result = sdp_algorithm(g, opts.alpha, opts.epsilon, seed);
        rec.extra["L"] =
            std::to_string(sdp_restart_count(opts.alpha, opts.epsilon));
        std::ostringstream tr;
        tr.precision(17);
        tr << theoretical_ratio(opts.alpha, opts.epsilon);
        rec.extra["theoretical_ratio"] = tr.str();
    } else if (opts.algorithm == "twdp") {
        const TreeDecomposition td = min_fill_decomposition(g);
        DpLimits limits;
        limits.width_guard = opts.width_guard;
        const ExactResult er = solve_dp(g, to_nice(td), opts.k, limits);
        rec.extra["width"] = std::to_string(td.width());
        rec.extra["exact"] = "true";
        result = er.witness;
    } else if (opts.algorithm == "ptas") {
        if (!opts.layers)
            throw precondition_error("solve: ptas route needs a layering");
        DpLimits limits;
        limits.width_guard = opts.width_guard;
        result = ptas(g, *opts.layers, opts.k, opts.epsilon, limits);
        rec.extra["epsilon"] = std::to_string(opts.epsilon);
    } else if (opts.algorithm == "grid-5p") {
        result = construct_5p_placement(opts.board_a, opts.board_b, opts.k);
    } else if (opts.algorithm == "grid-full") {
        const int a = opts.board_a, b = opts.board_b;
        const int u = proper_fragment_count(a, b);
        if (opts.k >= u && 2 * opts.k <= a * b) {
            auto placed = full_integration_placement(a, b, opts.k);
            if (!placed)
                throw budget_error("grid-full: no proper tiling with exactly p fragments found");
            result = std::move(*placed);
        } else if (2 * opts.k <= a * b) {
            // draft leaves p in (T, U) open; fall back to local search
            auto [a2, trace] = local_improvement(g, opts.k, seed);
            rec.extra["heuristic"] = "true";
            result = std::move(a2);
        } else {
            throw precondition_error("grid-full: p exceeds a*b/2");
        }
    } else {
        throw precondition_error("solve: unknown algorithm " + opts.algorithm);
    }
    const auto t1 = std::chrono::steady_clock::now();
    rec.wall_ms =
        std::chrono::duration<double, std::milli>(t1 - t0).count();

    rec.k = result.k;
    rec.objective = ioa_naive(g, result);  // never trust self-reported values
    rec.mu = g.n > 0 ? static_cast<double>(rec.objective) / g.n : 0.0;
    if (opts.with_gamma) {
        const ExactResult opt = brute_force_opt(g, result.k, opts.budget);
        if (opt.opt_value > 0)
            rec.gamma = static_cast<double>(rec.objective) / opt.opt_value;
    }
    return rec;
}

std::vector<RunRecord> run_seeds(const Graph& g, const std::string& descr,
                                 const SolveOptions& opts,
                                 const std::vector<std::uint64_t>& seeds) {
    std::vector<RunRecord> out(seeds.size());
    const int workers = std::max(
        1, std::min<int>(max_threads_from_env(), static_cast<int>(seeds.size())));
    if (workers == 1) {
        for (std::size_t i = 0; i < seeds.size(); ++i)
            out[i] = run_solver(g, descr, opts, seeds[i]);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mu;
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= seeds.size() || failed.load()) return;
                try {
                    out[i] = run_solver(g, descr, opts, seeds[i]);
                } catch (...) {
                    std::lock_guard<std::mutex> lk(error_mu);
                    if (!error) error = std::current_exception();
                    failed.store(true);
                    return;
                }
            }
        });
    for (auto& t : pool) t.join();
    if (failed.load()) std::rethrow_exception(error);
    return out;
}

} // namespace imioa
