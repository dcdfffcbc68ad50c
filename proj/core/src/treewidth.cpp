#include "imioa/treewidth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "imioa/errors.hpp"

namespace imioa {

int TreeDecomposition::width() const {
    std::size_t mx = 0;
    for (const auto& b : bags) mx = std::max(mx, b.size());
    return static_cast<int>(mx) - 1;
}

TreeDecomposition min_fill_decomposition(const Graph& g) {
    TreeDecomposition td;
    if (g.n == 0) {
        td.bags.push_back({});
        return td;
    }
    std::vector<std::set<int>> adj(g.n);
    for (int v = 0; v < g.n; ++v)
        adj[v] = {g.adjacency[v].begin(), g.adjacency[v].end()};
    std::vector<bool> gone(g.n, false);
    std::vector<int> elim_index(g.n, -1);
    std::vector<int> order;
    for (int step = 0; step < g.n; ++step) {
        int pick = -1;
        long long pick_fill = 0;
        for (int v = 0; v < g.n; ++v) {
            if (gone[v]) continue;
            long long fill = 0;
            for (auto it = adj[v].begin(); it != adj[v].end(); ++it)
                for (auto jt = std::next(it); jt != adj[v].end(); ++jt)
                    if (!adj[*it].count(*jt)) ++fill;
            if (pick == -1 || fill < pick_fill) {
                pick = v;
                pick_fill = fill;
            }
        }
        std::vector<int> bag(adj[pick].begin(), adj[pick].end());
        bag.push_back(pick);
        std::sort(bag.begin(), bag.end());
        td.bags.push_back(std::move(bag));
        elim_index[pick] = step;
        order.push_back(pick);
        for (int u : adj[pick])
            for (int w : adj[pick])
                if (u < w) {
                    adj[u].insert(w);
                    adj[w].insert(u);
                }
        for (int u : adj[pick]) adj[u].erase(pick);
        adj[pick].clear();
        gone[pick] = true;
    }
    // parent of bag t: the bag of the earliest-eliminated vertex in it other
    // than its own; singleton bags (isolated at elimination time) chain to the
    // next bag, which keeps the structure a tree without touching any
    // vertex's subtree
    for (int t = 0; t < g.n; ++t) {
        int parent = -1;
        for (int u : td.bags[t])
            if (u != order[t] && elim_index[u] > t &&
                (parent == -1 || elim_index[u] < elim_index[parent]))
                parent = u;
        if (parent != -1)
            td.tree_edges.emplace_back(t, elim_index[parent]);
        else if (t + 1 < g.n)
            td.tree_edges.emplace_back(t, t + 1);
    }
    return td;
}

bool validate_decomposition(const Graph& g, const TreeDecomposition& td) {
    const int nb = static_cast<int>(td.bags.size());
    if (nb == 0) return false;
    // tree shape
    if (static_cast<int>(td.tree_edges.size()) != nb - 1) return false;
    std::vector<std::vector<int>> tadj(nb);
    for (auto [i, j] : td.tree_edges) {
        if (i < 0 || j < 0 || i >= nb || j >= nb || i == j) return false;
        tadj[i].push_back(j);
        tadj[j].push_back(i);
    }
    std::vector<int> stack{0}, seen(nb, 0);
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (int y : tadj[x])
            if (!seen[y]) {
                seen[y] = 1;
                ++reached;
                stack.push_back(y);
            }
    }
    if (reached != nb) return false;
    // vertex + edge coverage
    std::vector<std::vector<int>> bags_of(g.n);
    for (int i = 0; i < nb; ++i)
        for (int v : td.bags[i]) {
            if (v < 0 || v >= g.n) return false;
            bags_of[v].push_back(i);
        }
    for (int v = 0; v < g.n; ++v)
        if (bags_of[v].empty()) return false;
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adjacency[u]) {
            if (u > v) continue;
            bool covered = false;
            for (int i : bags_of[u])
                if (std::binary_search(td.bags[i].begin(), td.bags[i].end(), v)) {
                    covered = true;
                    break;
                }
            if (!covered) return false;
        }
    // connected subtree per vertex
    for (int v = 0; v < g.n; ++v) {
        std::vector<char> in_bag(nb, 0);
        for (int i : bags_of[v]) in_bag[i] = 1;
        std::vector<int> st{bags_of[v][0]};
        std::vector<char> vis(nb, 0);
        vis[st[0]] = 1;
        int cnt = 1;
        while (!st.empty()) {
            const int x = st.back();
            st.pop_back();
            for (int y : tadj[x])
                if (in_bag[y] && !vis[y]) {
                    vis[y] = 1;
                    ++cnt;
                    st.push_back(y);
                }
        }
        if (cnt != static_cast<int>(bags_of[v].size())) return false;
    }
    return true;
}

namespace {

std::vector<int> sorted_copy(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

NiceDecomposition to_nice(const TreeDecomposition& td) {
    const int nb = static_cast<int>(td.bags.size());
    if (nb == 0) throw precondition_error("to_nice: empty decomposition");
    std::vector<std::vector<int>> tadj(nb);
    for (auto [i, j] : td.tree_edges) {
        tadj[i].push_back(j);
        tadj[j].push_back(i);
    }
    NiceDecomposition nd;
    auto add = [&](NiceNode n) {
        nd.nodes.push_back(std::move(n));
        return static_cast<int>(nd.nodes.size()) - 1;
    };
    // transforms the nice subtree rooted at `node` (bag `from`) so its root
    // bag becomes `to`, forgetting then introducing one vertex at a time
    auto morph = [&](int node, std::vector<int> from, const std::vector<int>& to) {
        std::vector<int> to_forget, to_introduce;
        for (int v : from)
            if (!std::binary_search(to.begin(), to.end(), v)) to_forget.push_back(v);
        for (int v : to)
            if (!std::binary_search(from.begin(), from.end(), v))
                to_introduce.push_back(v);
        for (int v : to_forget) {
            from.erase(std::find(from.begin(), from.end(), v));
            node = add({NiceNode::Kind::forget, from, {node}, v});
        }
        for (int v : to_introduce) {
            from.insert(std::lower_bound(from.begin(), from.end(), v), v);
            node = add({NiceNode::Kind::introduce, from, {node}, v});
        }
        return node;
    };
    // leaf chain: a one-vertex (or empty) leaf bag grown by introduces
    auto make_leaf = [&](const std::vector<int>& bag) {
        if (bag.empty()) return add({NiceNode::Kind::leaf, {}, {}, -1});
        const int node = add({NiceNode::Kind::leaf, {bag[0]}, {}, -1});
        return morph(node, {bag[0]}, bag);
    };
    std::function<int(int, int)> build = [&](int t, int parent) -> int {
        const std::vector<int> bag = sorted_copy(td.bags[t]);
        std::vector<int> sub;
        for (int c : tadj[t])
            if (c != parent)
                sub.push_back(morph(build(c, t), sorted_copy(td.bags[c]), bag));
        if (sub.empty()) return make_leaf(bag);
        int acc = sub[0];
        for (std::size_t i = 1; i < sub.size(); ++i)
            acc = add({NiceNode::Kind::join, bag, {acc, sub[i]}, -1});
        return acc;
    };
    nd.root = build(0, -1);
    return nd;
}

// ---- credited DP -----------------------------------------------------------

namespace {

struct Bits {
    std::vector<std::uint64_t> w;
    void init(int n) { w.assign((n + 63) / 64, 0); }
    void set(int i) { w[i >> 6] |= 1ULL << (i & 63); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    void or_with(const Bits& o) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] |= o.w[i];
    }
    int count_or_minus(const Bits& o, const Bits& minus) const {
        // popcount((this | o) & ~minus)
        int c = 0;
        for (std::size_t i = 0; i < w.size(); ++i)
            c += std::popcount((w[i] | o.w[i]) & ~minus.w[i]);
        return c;
    }
};

struct Entry {
    int value = -1;
    Bits witness;   // type-1 vertices of Y_i
    Bits integ;     // truly integrated vertices of G[Y_i] under witness
};

struct NodeCtx {
    const NiceNode* node;
    std::vector<int> bag;
    int b = 0;                       // bag size
    std::vector<std::uint32_t> adjmask;  // bag-internal adjacency
    Bits ybits;
    int ysize = 0;
    int kcap = 0;
    std::vector<Entry> table;        // [(S * 2^b + C) * (kcap+1) + gamma]
    bool done = false;

    Entry& at(std::uint32_t s, std::uint32_t c, int gamma) {
        return table[(s << b | c) * (kcap + 1) + gamma];
    }
};

struct DpRun {
    const Graph& g;
    const NiceDecomposition& nd;
    int k;
    const DpLimits& limits;
    std::vector<NodeCtx> ctx;
    long long entries_computed = 0;

    DpRun(const Graph& g_, const NiceDecomposition& nd_, int k_,
          const DpLimits& limits_)
        : g(g_), nd(nd_), k(k_), limits(limits_) {}

    std::uint32_t z_of(const NodeCtx& c, std::uint32_t smask) const {
        const std::uint32_t full = (c.b == 32) ? ~0u : (1u << c.b) - 1;
        std::uint32_t z = 0;
        for (int p = 0; p < c.b; ++p) {
            const std::uint32_t opp =
                (smask >> p & 1) ? (full & ~smask) : smask;
            if (c.adjmask[p] & opp) z |= 1u << p;
        }
        return z;
    }

    Bits globalize(const NodeCtx& c, std::uint32_t mask) const {
        Bits b;
        b.init(g.n);
        for (int p = 0; p < c.b; ++p)
            if (mask >> p & 1) b.set(c.bag[p]);
        return b;
    }

    void prepare() {
        const int nn = static_cast<int>(nd.nodes.size());
        ctx.resize(nn);
        long long weight = 0;
        for (int i = 0; i < nn; ++i) {
            NodeCtx& c = ctx[i];
            c.node = &nd.nodes[i];
            c.bag = c.node->bag;
            if (!std::is_sorted(c.bag.begin(), c.bag.end()))
                throw precondition_error("solve_dp: bag not sorted");
            c.b = static_cast<int>(c.bag.size());
            if (c.b - 1 > limits.width_guard)
                throw budget_error("solve_dp: width guard exceeded");
            c.adjmask.assign(c.b, 0);
            for (int p = 0; p < c.b; ++p)
                for (int q = 0; q < c.b; ++q)
                    if (p != q && g.has_edge(c.bag[p], c.bag[q]))
                        c.adjmask[p] |= 1u << q;
            c.ybits.init(g.n);
            for (int v : c.bag) c.ybits.set(v);
            c.ysize = c.b;
            for (int ch : c.node->children) {
                c.ybits.or_with(ctx[ch].ybits);
            }
            c.ysize = 0;
            for (auto wd : c.ybits.w) c.ysize += std::popcount(wd);
            c.kcap = std::min(c.ysize, k);
            weight += (1LL << (2 * c.b)) * (c.kcap + 1) * c.ysize;
        }
        if (weight > limits.memory_cap)
            throw budget_error("solve_dp: table memory cap exceeded");
    }

    void compute(int i);
    void run() {
        // children appear before parents by construction of to_nice; fall
        // back to a post-order walk for externally built decompositions
        std::function<void(int)> rec = [&](int i) {
            for (int ch : nd.nodes[i].children)
                if (!ctx[ch].done) rec(ch);
            compute(i);
            ctx[i].done = true;
            for (int ch : nd.nodes[i].children) {
                ctx[ch].table.clear();
                ctx[ch].table.shrink_to_fit();
            }
        };
        rec(nd.root);
    }
};

void DpRun::compute(int i) {
    NodeCtx& c = ctx[i];
    const std::uint32_t states = 1u << c.b;
    c.table.assign(static_cast<std::size_t>(states) * states * (c.kcap + 1),
                   Entry{});
    switch (c.node->kind) {
    case NiceNode::Kind::leaf: {
        for (std::uint32_t s = 0; s < states; ++s) {
            const int gamma = std::popcount(s);
            if (gamma > c.kcap) continue;
            const std::uint32_t z = z_of(c, s);
            const Bits wit = globalize(c, s);
            const Bits zg = globalize(c, z);
            for (std::uint32_t cm = 0; cm < states; ++cm) {
                Entry& e = c.at(s, cm, gamma);
                e.value = std::popcount(cm | z);
                e.witness = wit;
                e.integ = zg;
                ++entries_computed;
            }
        }
        break;
    }
    case NiceNode::Kind::introduce: {
        NodeCtx& ch = ctx[c.node->children[0]];
        const int v = c.node->vertex;
        const int pv = static_cast<int>(
            std::lower_bound(c.bag.begin(), c.bag.end(), v) - c.bag.begin());
        if (pv >= c.b || c.bag[pv] != v)
            throw precondition_error("solve_dp: introduce vertex not in bag");
        auto drop = [&](std::uint32_t m) {
            return (m & ((1u << pv) - 1)) | ((m >> (pv + 1)) << pv);
        };
        for (std::uint32_t s = 0; s < states; ++s) {
            const std::uint32_t z = z_of(c, s);
            const bool v_in_s = (s >> pv) & 1;
            const Bits zg = globalize(c, z);
            for (std::uint32_t cm = 0; cm < states; ++cm) {
                const std::uint32_t base = cm | z;
                const std::uint32_t cs = drop(s);
                const std::uint32_t cc = drop(base & ~(1u << pv));
                for (int gamma = 0; gamma <= c.kcap; ++gamma) {
                    const int gc = gamma - (v_in_s ? 1 : 0);
                    if (gc < 0 || gc > ch.kcap) continue;
                    const Entry& ce = ch.at(cs, cc, gc);
                    if (ce.value < 0) continue;
                    Entry& e = c.at(s, cm, gamma);
                    e.value = ce.value + ((base >> pv) & 1);
                    e.witness = ce.witness;
                    if (v_in_s) e.witness.set(v);
                    e.integ = ce.integ;
                    e.integ.or_with(zg);
                    ++entries_computed;
                }
            }
        }
        break;
    }
    case NiceNode::Kind::forget: {
        NodeCtx& ch = ctx[c.node->children[0]];
        const int v = c.node->vertex;
        const int pv = static_cast<int>(
            std::lower_bound(ch.bag.begin(), ch.bag.end(), v) - ch.bag.begin());
        if (pv >= ch.b || ch.bag[pv] != v)
            throw precondition_error("solve_dp: forgotten vertex not in child bag");
        auto lift = [&](std::uint32_t m) {
            return (m & ((1u << pv) - 1)) | ((m >> pv) << (pv + 1));
        };
        for (std::uint32_t s = 0; s < states; ++s) {
            for (std::uint32_t cm = 0; cm < states; ++cm) {
                const std::uint32_t cs = lift(s);
                const std::uint32_t cc = lift(cm);
                for (int gamma = 0; gamma <= c.kcap; ++gamma) {
                    const Entry* pick = nullptr;
                    if (gamma <= ch.kcap) {
                        const Entry& e0 = ch.at(cs, cc, gamma);
                        const Entry& e1 = ch.at(cs | (1u << pv), cc, gamma);
                        if (e0.value >= 0) pick = &e0;
                        if (e1.value > (pick ? pick->value : -1)) pick = &e1;
                    }
                    if (!pick) continue;
                    c.at(s, cm, gamma) = *pick;
                    ++entries_computed;
                }
            }
        }
        break;
    }
    case NiceNode::Kind::join: {
        NodeCtx& c1 = ctx[c.node->children[0]];
        NodeCtx& c2 = ctx[c.node->children[1]];
        if (c1.bag != c.bag || c2.bag != c.bag)
            throw precondition_error("solve_dp: join children bags differ");
        const std::uint32_t full = (c.b == 32) ? ~0u : (1u << c.b) - 1;
        for (std::uint32_t s = 0; s < states; ++s) {
            const std::uint32_t z = z_of(c, s);
            const int scount = std::popcount(s);
            for (std::uint32_t cm = 0; cm < states; ++cm) {
                const std::uint32_t base = cm | z;
                const std::uint32_t q = full & ~base;
                const Bits baseg = globalize(c, base);
                const int basec = std::popcount(base);
                for (int gamma = scount; gamma <= c.kcap; ++gamma) {
                    Entry* out = &c.at(s, cm, gamma);
                    // enumerate child budgets and credit guesses
                    for (int g1 = scount; g1 <= std::min(gamma, c1.kcap); ++g1) {
                        const int g2 = gamma + scount - g1;
                        if (g2 < scount || g2 > c2.kcap) continue;
                        for (std::uint32_t q1 = q;; q1 = (q1 - 1) & q) {
                            const Entry& e1 = c1.at(s, base | (q & ~q1), g1);
                            if (e1.value >= 0) {
                                for (std::uint32_t q2 = q;; q2 = (q2 - 1) & q) {
                                    const Entry& e2 =
                                        c2.at(s, base | (q & ~q2), g2);
                                    if (e2.value >= 0) {
                                        const int cand =
                                            basec + e1.integ.count_or_minus(
                                                        e2.integ, baseg);
                                        if (cand > out->value) {
                                            out->value = cand;
                                            out->witness = e1.witness;
                                            out->witness.or_with(e2.witness);
                                            out->integ = e1.integ;
                                            out->integ.or_with(e2.integ);
                                        }
                                    }
                                    if (q2 == 0) break;
                                }
                            }
                            if (q1 == 0) break;
                        }
                    }
                    if (out->value >= 0) ++entries_computed;
                }
            }
        }
        break;
    }
    }
}

Assignment witness_to_assignment(const Graph& g, const Bits& wit, int gamma) {
    std::vector<int> type1;
    for (int v = 0; v < g.n; ++v)
        if (wit.test(v)) type1.push_back(v);
    (void)gamma;
    return make_assignment(g.n, type1);
}

} // namespace

std::vector<DpProfileEntry> dp_profile(const Graph& g,
                                       const NiceDecomposition& nd, int kmax,
                                       const DpLimits& limits) {
    if (nd.root < 0 || nd.root >= static_cast<int>(nd.nodes.size()))
        throw precondition_error("solve_dp: bad root");
    if (kmax < 0 || kmax > g.n)
        throw precondition_error("solve_dp: budget out of range");
    DpRun run(g, nd, kmax, limits);
    run.prepare();
    if (run.ctx[nd.root].ysize != g.n)
        throw precondition_error("solve_dp: decomposition does not cover the graph");
    run.run();
    NodeCtx& root = run.ctx[nd.root];
    std::vector<DpProfileEntry> out(kmax + 1);
    for (int gamma = 0; gamma <= std::min(kmax, root.kcap); ++gamma) {
        const Entry* best = nullptr;
        for (std::uint32_t s = 0; s < (1u << root.b); ++s) {
            const Entry& e = root.at(s, 0, gamma);
            if (e.value >= 0 && (!best || e.value > best->value)) best = &e;
        }
        if (best) {
            out[gamma].value = best->value;
            out[gamma].witness = witness_to_assignment(g, best->witness, gamma);
        }
    }
    return out;
}

ExactResult solve_dp(const Graph& g, const NiceDecomposition& nd, int k,
                     const DpLimits& limits) {
    if (nd.root < 0 || nd.root >= static_cast<int>(nd.nodes.size()))
        throw precondition_error("solve_dp: bad root");
    if (k < 0 || k > g.n)
        throw precondition_error("solve_dp: budget out of range");
    DpRun run(g, nd, k, limits);
    run.prepare();
    if (run.ctx[nd.root].ysize != g.n)
        throw precondition_error("solve_dp: decomposition does not cover the graph");
    run.run();
    NodeCtx& root = run.ctx[nd.root];
    const Entry* best = nullptr;
    for (std::uint32_t s = 0; s < (1u << root.b); ++s) {
        const Entry& e = root.at(s, 0, k);
        if (e.value >= 0 && (!best || e.value > best->value)) best = &e;
    }
    if (!best)
        throw precondition_error("solve_dp: no feasible root entry");
    ExactResult res;
    res.opt_value = best->value;
    res.witness = witness_to_assignment(g, best->witness, k);
    res.nodes_explored = run.entries_computed;
    return res;
}

std::string decomposition_to_json(const TreeDecomposition& td) {
    nlohmann::json j;
    j["bags"] = td.bags;
    j["edges"] = nlohmann::json::array();
    for (auto [a, b] : td.tree_edges) j["edges"].push_back({a, b});
    return j.dump();
}

TreeDecomposition decomposition_from_json(const std::string& text) {
    TreeDecomposition td;
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
        td.bags = j.at("bags").get<std::vector<std::vector<int>>>();
        for (const auto& e : j.at("edges"))
            td.tree_edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    } catch (const nlohmann::json::exception& ex) {
        throw precondition_error(std::string("decomposition JSON: ") + ex.what());
    }
    for (auto& b : td.bags) std::sort(b.begin(), b.end());
    return td;
}

} // namespace imioa
