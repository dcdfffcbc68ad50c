#include "imioa/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "imioa/errors.hpp"
#include "imioa/rng.hpp"

namespace imioa {

namespace {

void check_embedding(const Graph& g, const SdpEmbedding& e) {
    if (static_cast<int>(e.vectors.size()) != g.n)
        throw precondition_error("embedding: vector count != vertex count");
    for (const auto& y : e.vectors)
        if (static_cast<int>(y.size()) != e.d)
            throw precondition_error("embedding: dimension mismatch");
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

void normalize(std::vector<double>& y) {
    const double norm = std::sqrt(dot(y, y));
    if (norm < 1e-12) {
        std::fill(y.begin(), y.end(), 0.0);
        y[0] = 1.0;
        return;
    }
    for (double& c : y) c /= norm;
}

double constraint_bound(int n, double alpha) {
    const double s = (1.0 - 2.0 * alpha) * n;
    return (s * s - n) / 2.0;
}

} // namespace

double sdp_objective(const Graph& g, const SdpEmbedding& e) {
    check_embedding(g, e);
    double total = 0.0;
    for (int i = 0; i < g.n; ++i) {
        double best = 0.0;
        bool any = false;
        for (int j : g.adjacency[i]) {
            const double term = (1.0 - dot(e.vectors[i], e.vectors[j])) / 2.0;
            if (!any || term > best) best = term;
            any = true;
        }
        total += any ? best : 0.0;
    }
    return total;
}

double constraint_gap(const SdpEmbedding& e, double alpha) {
    const int n = static_cast<int>(e.vectors.size());
    if (n == 0) return 0.0;
    // sum_{i<j} y_i.y_j = (|sum y_i|^2 - sum |y_i|^2) / 2
    std::vector<double> s(e.d, 0.0);
    double sq = 0.0;
    for (const auto& y : e.vectors) {
        for (int c = 0; c < e.d; ++c) s[c] += y[c];
        sq += dot(y, y);
    }
    const double pair_sum = (dot(s, s) - sq) / 2.0;
    return pair_sum - constraint_bound(n, alpha);
}

SdpEmbedding solve_relaxation(const Graph& g, double alpha, const SdpConfig& cfg,
                              std::uint64_t seed, SdpSolveInfo* info) {
    if (!(alpha > 0.0 && alpha <= 0.5))
        throw precondition_error("solve_relaxation: need 0 < alpha <= 1/2");
    if (g.n < 2) throw precondition_error("solve_relaxation: need n >= 2");
    const int n = g.n;
    const int d = cfg.d > 0
                      ? cfg.d
                      : std::max(2, static_cast<int>(std::ceil(std::sqrt(2.0 * n))) + 1);
    const double bound = constraint_bound(n, alpha);
    const double feas_tol = cfg.tolerance * n * n;

    SdpEmbedding best;
    double best_obj = -1.0;
    bool found = false;
    double last_gap = 0.0;
    SdpEmbedding last;

    auto consider = [&](const std::vector<std::vector<double>>& ys) {
        SdpEmbedding e{d, ys};
        const double gap = constraint_gap(e, alpha);
        last = e;
        last_gap = gap;
        if (gap <= feas_tol) {
            const double obj = sdp_objective(g, e);
            if (!found || obj > best_obj) {
                best = std::move(e);
                best_obj = obj;
                found = true;
            }
        }
    };

    for (int restart = 0; restart < std::max(1, cfg.restarts); ++restart) {
        rng::engine e(rng::mix(seed, restart));
        std::vector<std::vector<double>> y(n, std::vector<double>(d, 0.0));
        if (restart == 0) {
            // balanced integral warm start: ceil(alpha*n) vertices at -e1
            // satisfies the pair-sum bound exactly, so a feasible point is
            // always on record
            const int kw = static_cast<int>(std::ceil(alpha * n - 1e-12));
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            for (int i = 0; i < kw; ++i) {
                const int j = i + static_cast<int>(rng::next_below(e, n - i));
                std::swap(perm[i], perm[j]);
            }
            for (int i = 0; i < n; ++i) y[i][0] = 1.0;
            for (int i = 0; i < kw; ++i) y[perm[i]][0] = -1.0;
        } else {
            for (auto& yi : y) {
                for (double& c : yi) c = rng::next_normal(e);
                normalize(yi);
            }
        }
        consider(y);

        std::vector<std::vector<double>> grad(n, std::vector<double>(d));
        std::vector<double> w;
        for (int t = 0; t < cfg.max_iters; ++t) {
            const double tau =
                std::pow(0.01, cfg.max_iters > 1
                                   ? static_cast<double>(t) / (cfg.max_iters - 1)
                                   : 1.0);
            for (auto& gi : grad) std::fill(gi.begin(), gi.end(), 0.0);
            // soft-max objective ascent direction
            for (int i = 0; i < n; ++i) {
                const auto& nb = g.adjacency[i];
                if (nb.empty()) continue;
                w.resize(nb.size());
                double mx = -1e300;
                for (std::size_t a_ = 0; a_ < nb.size(); ++a_) {
                    w[a_] = (1.0 - dot(y[i], y[nb[a_]])) / (2.0 * tau);
                    mx = std::max(mx, w[a_]);
                }
                double z = 0.0;
                for (double& wa : w) {
                    wa = std::exp(wa - mx);
                    z += wa;
                }
                for (std::size_t a_ = 0; a_ < nb.size(); ++a_) {
                    const double wij = w[a_] / z;
                    const int j = nb[a_];
                    for (int c = 0; c < d; ++c) {
                        grad[i][c] -= wij * y[j][c] / 2.0;
                        grad[j][c] -= wij * y[i][c] / 2.0;
                    }
                }
            }
            // quadratic penalty on constraint violation
            std::vector<double> s(d, 0.0);
            for (const auto& yi : y)
                for (int c = 0; c < d; ++c) s[c] += yi[c];
            const double gap = (dot(s, s) - n) / 2.0 - bound;
            if (gap > 0.0) {
                const double coef = 2.0 * cfg.penalty_weight * gap;
                for (int i = 0; i < n; ++i)
                    for (int c = 0; c < d; ++c)
                        grad[i][c] -= coef * (s[c] - y[i][c]);
            }
            for (int i = 0; i < n; ++i) {
                for (int c = 0; c < d; ++c) y[i][c] += cfg.step_size * grad[i][c];
                normalize(y[i]);
            }
            consider(y);
        }
    }

    if (info) {
        info->feasible_found = found;
        info->objective = found ? best_obj : sdp_objective(g, last);
        info->gap = found ? constraint_gap(best, alpha) : last_gap;
    }
    return found ? best : last;
}

RoundedPartition hyperplane_round(const SdpEmbedding& e, std::uint64_t seed) {
    rng::engine rnd(seed);
    std::vector<double> r(e.d);
    for (double& c : r) c = rng::next_normal(rnd);
    RoundedPartition part;
    part.normal_seed = seed;
    for (int i = 0; i < static_cast<int>(e.vectors.size()); ++i)
        (dot(e.vectors[i], r) >= 0.0 ? part.v1 : part.v2).push_back(i);
    return part;
}

Assignment fix_size_traced(const Graph& g, const RoundedPartition& part, int k,
                           std::vector<std::pair<int, int>>* trace) {
    if (static_cast<int>(part.v1.size() + part.v2.size()) != g.n)
        throw precondition_error("fix_size: partition does not cover V");
    if (static_cast<int>(part.v1.size()) < k)
        throw precondition_error("fix_size: |v1| < k (swap labels first)");
    Assignment a = make_assignment(g.n, part.v1);
    IoACache cache = build_cache(g, a);
    if (trace) {
        trace->clear();
        trace->emplace_back(cache.ioa, a.k);
    }
    const int moves = a.k - k;
    for (int t = 0; t < moves; ++t) {
        int best = -1, best_delta = 0;
        for (int i = 0; i < g.n; ++i) {
            if (a.types[i] != 1) continue;
            // objective change of demoting i to type 2
            int delta = 0;
            bool integrated_after = false;
            for (int wv : g.adjacency[i]) {
                if (a.types[wv] == 1) integrated_after = true;
                const int new_opp =
                    cache.opp_count[wv] + (a.types[wv] == 1 ? 1 : -1);
                delta += (new_opp > 0) - (cache.opp_count[wv] > 0);
            }
            delta += integrated_after - (cache.opp_count[i] > 0);
            if (best == -1 || delta > best_delta) {
                best = i;
                best_delta = delta;
            }
        }
        a.types[best] = 2;
        --a.k;
        cache = build_cache(g, a);
        if (trace) trace->emplace_back(cache.ioa, a.k);
    }
    return a;
}

Assignment fix_size(const Graph& g, const RoundedPartition& part, int k) {
    return fix_size_traced(g, part, k, nullptr);
}

int sdp_restart_count(double alpha, double epsilon) {
    const double beta = 1.0 / (4.0 * (alpha - alpha * alpha));
    const double a = ((1.0 + beta) - (1.0 - epsilon) * 2.0 * kAlphaGW) /
                     (1.0 + beta - 2.0 * kAlphaGW);
    return static_cast<int>(std::ceil(std::log(1.0 / epsilon) / std::log(a)));
}

Assignment sdp_algorithm(const Graph& g, double alpha, double epsilon,
                         std::uint64_t seed, const SdpConfig& cfg) {
    if (!(alpha > 0.0 && alpha <= 0.5))
        throw precondition_error("sdp_algorithm: need 0 < alpha <= 1/2");
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw precondition_error("sdp_algorithm: need 0 < epsilon < 1");
    const double kn = alpha * g.n;
    const int k = static_cast<int>(std::llround(kn));
    if (std::abs(kn - k) > 1e-9)
        throw precondition_error("sdp_algorithm: alpha*n must be integral");
    const SdpEmbedding e = solve_relaxation(g, alpha, cfg, seed);
    const int L = std::max(1, sdp_restart_count(alpha, epsilon));
    Assignment best;
    int best_val = -1;
    for (int t = 0; t < L; ++t) {
        RoundedPartition part = hyperplane_round(e, rng::mix(seed, 1000 + t));
        Assignment a;
        if (static_cast<int>(part.v1.size()) >= k) {
            a = fix_size(g, part, k);
        } else {
            // label symmetry: shrink the type-2 side to n-k, then invert
            std::swap(part.v1, part.v2);
            a = fix_size(g, part, g.n - k);
            for (auto& tv : a.types) tv = (tv == 1) ? 2 : 1;
            a.k = g.n - a.k;
        }
        const int val = ioa_naive(g, a);
        if (val > best_val) {
            best_val = val;
            best = std::move(a);
        }
    }
    return best;
}

double theoretical_ratio(double alpha, double epsilon) {
    const double two_agw = 2.0 * kAlphaGW;
    const double gamma =
        std::sqrt(alpha * (1.0 - alpha) * (1.0 - epsilon) * two_agw);
    return alpha *
           ((1.0 - epsilon) * two_agw -
            (gamma - gamma * gamma) / (alpha - alpha * alpha)) /
           gamma * (1.0 - epsilon);
}

SdpEmbedding integral_embedding(const Assignment& a, int d) {
    if (d < 1) throw precondition_error("integral_embedding: need d >= 1");
    SdpEmbedding e;
    e.d = d;
    e.vectors.assign(a.types.size(), std::vector<double>(d, 0.0));
    for (std::size_t i = 0; i < a.types.size(); ++i)
        e.vectors[i][0] = (a.types[i] == 1) ? 1.0 : -1.0;
    return e;
}

std::string embedding_to_json(const SdpEmbedding& e) {
    std::ostringstream out;
    out.precision(17);
    out << "{\"d\":" << e.d << ",\"vectors\":[";
    for (std::size_t i = 0; i < e.vectors.size(); ++i) {
        if (i) out << ',';
        out << '[';
        for (int c = 0; c < e.d; ++c) {
            if (c) out << ',';
            out << e.vectors[i][c];
        }
        out << ']';
    }
    out << "]}";
    return out.str();
}

} // namespace imioa
