#include "imioa/planar.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "imioa/errors.hpp"

namespace imioa {

BakerPartition baker_partition(const LayerStructure& layers, int q, int r) {
    if (q < 2) throw precondition_error("baker_partition: need q >= 2");
    if (r < 1 || r > q) throw precondition_error("baker_partition: r out of 1..q");
    const int ell = static_cast<int>(layers.layers.size());
    BakerPartition bp;
    bp.q = q;
    bp.r = r;
    int next = 0;
    while (next < ell) {
        const int take = (next == 0) ? std::min(r, ell) : std::min(q, ell - next);
        std::vector<int> stripe;
        for (int i = 0; i < take; ++i) {
            const auto& layer = layers.layers[next + i];
            stripe.insert(stripe.end(), layer.begin(), layer.end());
        }
        std::sort(stripe.begin(), stripe.end());
        bp.stripes.push_back(std::move(stripe));
        next += take;
    }
    return bp;
}

LayerStructure layers_from_json(const std::string& text, int n) {
    LayerStructure ls;
    try {
        const auto j = nlohmann::json::parse(text);
        ls.layers = j.at("layers").get<std::vector<std::vector<int>>>();
    } catch (const nlohmann::json::exception& ex) {
        throw precondition_error(std::string("layers JSON: ") + ex.what());
    }
    ls.layer_of.assign(n, 0);
    for (int i = 0; i < static_cast<int>(ls.layers.size()); ++i)
        for (int v : ls.layers[i]) {
            if (v < 0 || v >= n || ls.layer_of[v] != 0)
                throw precondition_error("layers JSON: not a partition of V");
            ls.layer_of[v] = i + 1;
        }
    for (int v = 0; v < n; ++v)
        if (ls.layer_of[v] == 0)
            throw precondition_error("layers JSON: vertex missing from layers");
    return ls;
}

namespace {

struct StripeSolution {
    std::vector<int> vertices;                 // global ids, ascending
    std::vector<DpProfileEntry> profile;       // by local type-1 budget
};

} // namespace

Assignment ptas(const Graph& g, const LayerStructure& layers, int k,
                double epsilon, const DpLimits& limits) {
    if (!(epsilon > 0.0)) throw precondition_error("ptas: need epsilon > 0");
    if (k < 0 || k > g.n) throw precondition_error("ptas: k out of range");
    if (static_cast<int>(layers.layer_of.size()) != g.n)
        throw precondition_error("ptas: layering does not match graph");
    const int q = 2 * static_cast<int>(std::ceil(1.0 / epsilon));
    Assignment best;
    int best_val = -1;
    for (int r = 1; r <= q; ++r) {
        const BakerPartition bp = baker_partition(layers, q, r);
        std::vector<StripeSolution> sols;
        for (const auto& stripe : bp.stripes) {
            // induced subgraph on the stripe
            std::vector<int> local_of(g.n, -1);
            for (int i = 0; i < static_cast<int>(stripe.size()); ++i)
                local_of[stripe[i]] = i;
            std::vector<std::pair<int, int>> edges;
            for (int u : stripe)
                for (int v : g.adjacency[u])
                    if (u < v && local_of[v] >= 0)
                        edges.emplace_back(local_of[u], local_of[v]);
            const Graph sub = build_graph(static_cast<int>(stripe.size()), edges);
            const auto nd = to_nice(min_fill_decomposition(sub));
            const int cap = std::min(k, sub.n);
            sols.push_back({stripe, dp_profile(sub, nd, cap, limits)});
        }
        // exact knapsack: spend exactly k across stripes
        const int ns = static_cast<int>(sols.size());
        constexpr int kNeg = -1;
        std::vector<std::vector<int>> val(ns + 1, std::vector<int>(k + 1, kNeg));
        std::vector<std::vector<int>> choice(ns + 1, std::vector<int>(k + 1, -1));
        val[0][0] = 0;
        for (int i = 0; i < ns; ++i) {
            const auto& prof = sols[i].profile;
            for (int b = 0; b <= k; ++b) {
                if (val[i][b] == kNeg) continue;
                for (int t = 0; t < static_cast<int>(prof.size()); ++t) {
                    if (prof[t].value < 0 || b + t > k) continue;
                    const int cand = val[i][b] + prof[t].value;
                    if (cand > val[i + 1][b + t]) {
                        val[i + 1][b + t] = cand;
                        choice[i + 1][b + t] = t;
                    }
                }
            }
        }
        if (val[ns][k] == kNeg) continue;  // cannot place k agents this way
        std::vector<int> type1;
        int b = k;
        for (int i = ns; i > 0; --i) {
            const int t = choice[i][b];
            b -= t;
            const auto& wit = sols[i - 1].profile[t].witness;
            for (int lv = 0; lv < static_cast<int>(wit.types.size()); ++lv)
                if (wit.types[lv] == 1) type1.push_back(sols[i - 1].vertices[lv]);
        }
        Assignment a = make_assignment(g.n, type1);
        const int value = ioa_naive(g, a);  // cross-stripe edges only help
        if (value > best_val) {
            best_val = value;
            best = std::move(a);
        }
    }
    if (best_val < 0) throw precondition_error("ptas: no feasible assignment");
    return best;
}

} // namespace imioa
