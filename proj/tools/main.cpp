// imioa: command-line front end for generating instances, running the
// solvers, and emitting benchmark records as CSV or JSON lines.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "imioa/bench.hpp"
#include "imioa/errors.hpp"
#include "imioa/exact.hpp"
#include "imioa/graph.hpp"
#include "imioa/grid.hpp"
#include "imioa/local_search.hpp"
#include "imioa/planar.hpp"
#include "imioa/sdp.hpp"
#include "imioa/treewidth.hpp"

namespace {

using namespace imioa;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw precondition_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw precondition_error("cannot write file: " + path);
    out << text;
}

Graph load_graph(const std::string& path) {
    return parse_edge_list(read_file(path));
}

std::vector<std::uint64_t> seed_range(std::uint64_t seed0, int count) {
    if (count < 1) throw precondition_error("--seeds must be >= 1");
    std::vector<std::uint64_t> s(count);
    std::iota(s.begin(), s.end(), seed0);
    return s;
}

void emit_records(const std::vector<RunRecord>& recs, const std::string& format,
                  const std::string& out_path) {
    std::ostringstream buf;
    if (format == "csv") {
        buf << csv_header() << '\n';
        for (const auto& r : recs) buf << record_to_csv(r) << '\n';
    } else {
        for (const auto& r : recs) buf << record_to_json(r) << '\n';
    }
    write_output(out_path, buf.str());
}

int run(int argc, char** argv) {
    CLI::App app{"IM-IoA solvers and benchmark harness"};
    app.require_subcommand(1);

    // ---- gen ----------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "generate a graph as an edge list");
    std::string gen_kind, gen_out;
    int gen_n = 0, gen_k = 0, gen_attach = 2, gen_a = 0, gen_b = 0;
    double gen_p = 0.0;
    std::uint64_t gen_seed = 0;
    gen->add_option("kind", gen_kind, "gnp|ba|grid|star|tight")->required();
    gen->add_option("--n", gen_n, "vertex count (gnp, ba, star)");
    gen->add_option("--p", gen_p, "edge probability (gnp)");
    gen->add_option("--attach", gen_attach, "edges per new vertex (ba)");
    gen->add_option("--a", gen_a, "grid rows");
    gen->add_option("--b", gen_b, "grid cols");
    gen->add_option("--k", gen_k, "gadget parameter (tight)");
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("-o,--out", gen_out, "output file (default stdout)");

    // ---- solve --------------------------------------------------------
    auto* solve = app.add_subcommand("solve", "run one algorithm over seeds");
    std::string s_alg, s_format = "jsonl", s_out, s_layers_path, s_graph_path;
    SolveOptions s_opts;
    int s_seeds = 1, s_a = 0, s_b = 0;
    std::uint64_t s_seed0 = 0;
    bool s_gamma = false;
    solve->add_option("--alg", s_alg,
                      "local|greedy|random|sdp|twdp|ptas|grid-5p|grid-full")
        ->required();
    solve->add_option("--k", s_opts.k, "type-1 agent count");
    solve->add_option("--alpha", s_opts.alpha, "type-1 fraction (sdp)");
    solve->add_option("--epsilon", s_opts.epsilon, "accuracy (sdp, ptas)");
    solve->add_option("--seeds", s_seeds, "number of seeds to run");
    solve->add_option("--seed", s_seed0, "first seed");
    solve->add_option("--budget", s_opts.budget, "exact-oracle node budget");
    solve->add_option("--width-guard", s_opts.width_guard,
                      "max admissible decomposition width (twdp, ptas)");
    solve->add_option("--layers", s_layers_path, "layer JSON file (ptas)");
    solve->add_option("--a", s_a, "board rows (grid routes)");
    solve->add_option("--b", s_b, "board cols (grid routes)");
    solve->add_option("--format", s_format, "csv|jsonl")
        ->check(CLI::IsMember({"csv", "jsonl"}));
    solve->add_option("--out", s_out, "output file (default stdout)");
    solve->add_flag("--gamma", s_gamma, "also compute OPT and report gamma");
    solve->add_option("graph", s_graph_path, "edge-list file (non-grid routes)");

    // ---- compare ------------------------------------------------------
    auto* compare = app.add_subcommand(
        "compare", "mean empirical ratio per algorithm on one instance");
    std::string c_graph_path, c_algs = "local,greedy,random", c_out;
    int c_k = -1, c_seeds = 20;
    std::uint64_t c_seed0 = 0;
    long long c_budget = 5'000'000;
    compare->add_option("graph", c_graph_path, "edge-list file")->required();
    compare->add_option("--k", c_k, "type-1 agent count")->required();
    compare->add_option("--algs", c_algs, "comma-separated algorithm list");
    compare->add_option("--seeds", c_seeds, "seeds per algorithm");
    compare->add_option("--seed", c_seed0, "first seed");
    compare->add_option("--budget", c_budget, "exact-oracle node budget");
    compare->add_option("--out", c_out, "output file (default stdout)");

    // ---- sweep-k ------------------------------------------------------
    auto* sweep = app.add_subcommand(
        "sweep-k", "run one algorithm across minority fractions");
    std::string w_graph_path, w_alg = "local", w_fracs = "", w_format = "jsonl",
                w_out;
    int w_seeds = 5;
    std::uint64_t w_seed0 = 0;
    sweep->add_option("graph", w_graph_path, "edge-list file")->required();
    sweep->add_option("--alg", w_alg, "algorithm (as in solve)");
    sweep->add_option("--fractions", w_fracs,
                      "comma-separated k/n fractions, e.g. 0.01,0.05,0.25")
        ->required();
    sweep->add_option("--seeds", w_seeds, "seeds per fraction");
    sweep->add_option("--seed", w_seed0, "first seed");
    sweep->add_option("--format", w_format, "csv|jsonl")
        ->check(CLI::IsMember({"csv", "jsonl"}));
    sweep->add_option("--out", w_out, "output file (default stdout)");

    // ---- exact --------------------------------------------------------
    auto* exact = app.add_subcommand("exact", "exhaustive optimum / coverage");
    std::string e_graph_path;
    int e_k = -1;
    long long e_budget = 5'000'000;
    bool e_dominating = false;
    exact->add_option("graph", e_graph_path, "edge-list file")->required();
    exact->add_option("--k", e_k, "type-1 agent count");
    exact->add_option("--budget", e_budget, "enumeration node budget");
    exact->add_flag("--dominating", e_dominating,
                    "report the minimum dominating-set size instead");

    // ---- grid ---------------------------------------------------------
    auto* grid = app.add_subcommand("grid", "board constructions and bounds");
    int g_a = 0, g_b = 0, g_p = -1;
    std::string g_mode = "info";
    grid->add_option("--a", g_a, "board rows")->required();
    grid->add_option("--b", g_b, "board cols")->required();
    grid->add_option("--p", g_p, "type-1 agent count (5p / full modes)");
    grid->add_option("--mode", g_mode, "info|5p|full")
        ->check(CLI::IsMember({"info", "5p", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (gen->parsed()) {
        Graph g;
        if (gen_kind == "gnp")
            g = gen_gnp(gen_n, gen_p, gen_seed);
        else if (gen_kind == "ba")
            g = gen_ba(gen_n, gen_attach, gen_seed);
        else if (gen_kind == "grid")
            g = gen_grid(gen_a, gen_b);
        else if (gen_kind == "star")
            g = gen_star(gen_n);
        else if (gen_kind == "tight")
            g = gen_tight(gen_k);
        else
            throw precondition_error("gen: unknown kind " + gen_kind);
        write_output(gen_out, write_edge_list(g));
        std::cerr << "n=" << g.n << " m=" << g.m << '\n';
        return 0;
    }

    if (solve->parsed()) {
        Graph g;
        std::string descr;
        const bool grid_route = s_alg.rfind("grid-", 0) == 0;
        if (grid_route || (s_graph_path.empty() && s_a > 0 && s_b > 0)) {
            g = gen_grid(s_a, s_b);
            descr = "grid(" + std::to_string(s_a) + "," + std::to_string(s_b) + ")";
            s_opts.board_a = s_a;
            s_opts.board_b = s_b;
        } else {
            if (s_graph_path.empty())
                throw precondition_error("solve: an edge-list file is required");
            g = load_graph(s_graph_path);
            descr = s_graph_path;
        }
        LayerStructure layers;
        if (!s_layers_path.empty()) {
            layers = layers_from_json(read_file(s_layers_path), g.n);
            s_opts.layers = &layers;
        } else if (s_alg == "ptas" && s_a > 0 && s_b > 0) {
            layers = layering(g, grid_boundary(s_a, s_b));
            s_opts.layers = &layers;
        }
        s_opts.algorithm = s_alg;
        s_opts.with_gamma = s_gamma;
        if (s_opts.k < 0 && !(s_opts.alpha > 0.0))
            throw precondition_error("solve: --k or --alpha is required");
        if (s_opts.k < 0 && s_alg != "sdp")
            throw precondition_error("solve: --k is required for this route");
        emit_records(run_seeds(g, descr, s_opts, seed_range(s_seed0, s_seeds)),
                     s_format, s_out);
        return 0;
    }

    if (compare->parsed()) {
        const Graph g = load_graph(c_graph_path);
        const ExactResult opt = brute_force_opt(g, c_k, c_budget);
        std::ostringstream buf;
        buf << "algorithm,mean_gamma,mean_objective,opt\n";
        std::string alg;
        std::istringstream algs(c_algs);
        while (std::getline(algs, alg, ',')) {
            if (alg.empty()) continue;
            SolveOptions o;
            o.algorithm = alg;
            o.k = c_k;
            o.budget = c_budget;
            const auto recs =
                run_seeds(g, c_graph_path, o, seed_range(c_seed0, c_seeds));
            double sum_obj = 0.0;
            for (const auto& r : recs) sum_obj += r.objective;
            const double mean_obj = sum_obj / recs.size();
            buf << alg << ',';
            if (opt.opt_value > 0)
                buf << (mean_obj / opt.opt_value);
            buf << ',' << mean_obj << ',' << opt.opt_value << '\n';
        }
        write_output(c_out, buf.str());
        return 0;
    }

    if (sweep->parsed()) {
        const Graph g = load_graph(w_graph_path);
        std::vector<double> fracs;
        std::string tok;
        std::istringstream in(w_fracs);
        while (std::getline(in, tok, ','))
            if (!tok.empty()) fracs.push_back(std::stod(tok));
        if (fracs.empty())
            throw precondition_error("sweep-k: fraction list is empty");
        std::vector<RunRecord> all;
        for (double f : fracs) {
            if (!(f >= 0.0 && f <= 1.0))
                throw precondition_error("sweep-k: fraction outside [0,1]");
            SolveOptions o;
            o.algorithm = w_alg;
            o.k = static_cast<int>(f * g.n);
            const auto recs =
                run_seeds(g, w_graph_path, o, seed_range(w_seed0, w_seeds));
            all.insert(all.end(), recs.begin(), recs.end());
        }
        emit_records(all, w_format, w_out);
        return 0;
    }

    if (exact->parsed()) {
        const Graph g = load_graph(e_graph_path);
        if (e_dominating) {
            std::cout << "{\"min_dominating_set_size\":"
                      << min_dominating_set_size_via_coverability(g, e_budget)
                      << "}\n";
            return 0;
        }
        if (e_k < 0) throw precondition_error("exact: --k is required");
        std::cout << exact_result_to_json(brute_force_opt(g, e_k, e_budget))
                  << '\n';
        return 0;
    }

    if (grid->parsed()) {
        if (g_mode == "info") {
            const PentominoPacking pack = pack_x_pentominoes(g_a, g_b);
            std::cout << "{\"a\":" << g_a << ",\"b\":" << g_b
                      << ",\"T\":" << pack.count
                      << ",\"U_construct\":" << proper_fragment_count(g_a, g_b)
                      << "}\n";
            return 0;
        }
        if (g_p < 0) throw precondition_error("grid: --p is required");
        Assignment a;
        if (g_mode == "5p") {
            a = construct_5p_placement(g_a, g_b, g_p);
        } else {
            auto placed = full_integration_placement(g_a, g_b, g_p);
            if (!placed)
                throw budget_error("grid: no proper tiling with exactly p fragments");
            a = std::move(*placed);
        }
        const Graph g = gen_grid(g_a, g_b);
        std::cout << render_board(g_a, g_b, a)
                  << "ioa=" << ioa_naive(g, a) << '\n';
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const imioa::budget_error& ex) {
        std::cerr << "budget exceeded: " << ex.what() << '\n';
        return 3;
    } catch (const imioa::precondition_error& ex) {
        std::cerr << "precondition failed: " << ex.what() << '\n';
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 2;
    }
}
