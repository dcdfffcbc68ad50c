#include "imioa/grid.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "imioa/errors.hpp"

namespace imioa {

namespace {

constexpr int kDr[4] = {-1, 1, 0, 0};
constexpr int kDc[4] = {0, 0, -1, 1};

int cell_id(int b, const Cell& c) { return c.first * b + c.second; }

bool adjacent(const Cell& x, const Cell& y) {
    return std::abs(x.first - y.first) + std::abs(x.second - y.second) == 1;
}

// A star is a footprint fragment with a cell adjacent to all others; with one
// type-1 agent on that cell every cell of the fragment is integrated.
bool is_star(const std::vector<Cell>& cells) {
    if (cells.size() < 2 || cells.size() > 5) return false;
    for (const Cell& ctr : cells) {
        bool ok = true;
        for (const Cell& x : cells)
            if (!(x == ctr) && !adjacent(x, ctr)) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return false;
}

Cell star_center(const std::vector<Cell>& cells) {
    for (const Cell& ctr : cells) {
        bool ok = true;
        for (const Cell& x : cells)
            if (!(x == ctr) && !adjacent(x, ctr)) {
                ok = false;
                break;
            }
        if (ok) return ctr;
    }
    throw precondition_error("fragment is not a star");
}

void check_board(int a, int b) {
    if (a < 1 || b < 1) throw precondition_error("board: need a, b >= 1");
}

} // namespace

PentominoPacking pack_x_pentominoes(int a, int b, long long budget) {
    check_board(a, b);
    if (a * b > 64)
        throw budget_error("pack: board too large for the exact search (a*b <= 64)");
    std::vector<Cell> cand;
    for (int r = 1; r + 1 < a; ++r)
        for (int c = 1; c + 1 < b; ++c) cand.emplace_back(r, c);
    auto footprint = [&](const Cell& ctr) {
        std::uint64_t m = 1ULL << cell_id(b, ctr);
        for (int d = 0; d < 4; ++d)
            m |= 1ULL << cell_id(b, {ctr.first + kDr[d], ctr.second + kDc[d]});
        return m;
    };
    PentominoPacking best;
    std::vector<Cell> chosen;
    long long nodes = 0;
    const int nc = static_cast<int>(cand.size());
    auto rec = [&](auto&& self, int i, std::uint64_t occupied) -> void {
        if (++nodes > budget) throw budget_error("pack: node budget exceeded");
        if (static_cast<int>(chosen.size()) > best.count) {
            best.count = static_cast<int>(chosen.size());
            best.centers = chosen;
        }
        if (i >= nc) return;
        if (static_cast<int>(chosen.size()) + (nc - i) <= best.count) return;
        const std::uint64_t fp = footprint(cand[i]);
        if ((fp & occupied) == 0) {
            chosen.push_back(cand[i]);
            self(self, i + 1, occupied | fp);
            chosen.pop_back();
        }
        self(self, i + 1, occupied);
    };
    rec(rec, 0, 0);
    return best;
}

Assignment construct_5p_placement(int a, int b, int p) {
    check_board(a, b);
    if (p < 0) throw precondition_error("5p: need p >= 0");
    const PentominoPacking pack = pack_x_pentominoes(a, b);
    if (p > pack.count)
        throw precondition_error("5p: p exceeds the board's pentomino capacity");
    std::vector<int> type1;
    for (int i = 0; i < p; ++i) type1.push_back(cell_id(b, pack.centers[i]));
    return make_assignment(a * b, type1);
}

FragmentTiling fragment_tiling_via_pushup(int a, int b) {
    check_board(a, b);
    FragmentTiling t;
    t.a = a;
    t.b = b;
    std::map<Cell, std::vector<Cell>> frags;
    for (int r = 0; r < a; ++r)
        for (int c = 0; c < b; ++c) {
            // exactly one of the five footprint candidates is a lattice center
            for (int d = -1; d < 4; ++d) {
                const int ci = r + (d < 0 ? 0 : kDr[d]);
                const int cj = c + (d < 0 ? 0 : kDc[d]);
                if (((ci + 2 * cj) % 5 + 5) % 5 == 0) {
                    frags[{ci, cj}].emplace_back(r, c);
                    break;
                }
            }
        }
    for (auto& [ctr, cells] : frags) t.fragments.push_back(std::move(cells));
    return t;
}

std::optional<FragmentTiling> refine_to_proper(const FragmentTiling& t) {
    FragmentTiling out = t;
    auto& frags = out.fragments;
    auto frag_adjacent = [](const std::vector<Cell>& f1,
                            const std::vector<Cell>& f2) {
        for (const Cell& x : f1)
            for (const Cell& y : f2)
                if (adjacent(x, y)) return true;
        return false;
    };
    for (;;) {
        int si = -1;
        for (int i = 0; i < static_cast<int>(frags.size()); ++i)
            if (frags[i].size() == 1) {
                si = i;
                break;
            }
        if (si == -1) break;
        bool handled = false;
        // absorb the single cell when the union stays a star
        for (int j = 0; j < static_cast<int>(frags.size()) && !handled; ++j) {
            if (j == si || !frag_adjacent(frags[si], frags[j])) continue;
            std::vector<Cell> u = frags[j];
            u.push_back(frags[si][0]);
            if (is_star(u)) {
                frags[j] = std::move(u);
                frags.erase(frags.begin() + si);
                handled = true;
            }
        }
        // otherwise re-split a neighboring union into two stars
        for (int j = 0; j < static_cast<int>(frags.size()) && !handled; ++j) {
            if (j == si || !frag_adjacent(frags[si], frags[j])) continue;
            std::vector<Cell> u = frags[j];
            u.push_back(frags[si][0]);
            std::sort(u.begin(), u.end());
            const int sz = static_cast<int>(u.size());
            for (std::uint32_t mask = 1; mask + 1 < (1u << sz) && !handled;
                 ++mask) {
                std::vector<Cell> p1, p2;
                for (int c = 0; c < sz; ++c)
                    ((mask >> c) & 1 ? p1 : p2).push_back(u[c]);
                if (is_star(p1) && is_star(p2)) {
                    frags[j] = std::move(p1);
                    frags[si] = std::move(p2);
                    handled = true;
                }
            }
        }
        if (!handled) return std::nullopt;
    }
    for (const auto& f : frags)
        if (!is_star(f)) return std::nullopt;
    return out;
}

int proper_fragment_count(int a, int b) {
    check_board(a, b);
    if (a * b < 2)
        throw precondition_error("proper tiling impossible: board has one cell");
    const auto refined = refine_to_proper(fragment_tiling_via_pushup(a, b));
    if (!refined) throw budget_error("fragment refinement failed on this board");
    return static_cast<int>(refined->fragments.size());
}

namespace {

Assignment stars_to_assignment(int a, int b,
                               const std::vector<std::vector<Cell>>& stars) {
    std::vector<int> type1;
    for (const auto& f : stars) type1.push_back(cell_id(b, star_center(f)));
    return make_assignment(a * b, type1);
}

} // namespace

std::optional<Assignment> full_integration_placement(int a, int b, int p,
                                                     long long budget) {
    check_board(a, b);
    const int u_construct = proper_fragment_count(a, b);
    if (p < u_construct || 2 * p > a * b)
        throw precondition_error(
            "full integration: p outside [proper_fragment_count, a*b/2]");
    if (p == u_construct) {
        const auto refined = refine_to_proper(fragment_tiling_via_pushup(a, b));
        return stars_to_assignment(a, b, refined->fragments);
    }
    // exact partition of the board into p stars, by backtracking on the first
    // uncovered cell
    std::vector<char> taken(a * b, 0);
    std::vector<std::vector<Cell>> stars;
    long long nodes = 0;
    int remaining = a * b;
    auto in_board = [&](int r, int c) { return r >= 0 && r < a && c >= 0 && c < b; };
    auto rec = [&](auto&& self) -> bool {
        if (++nodes > budget)
            throw budget_error("full integration: node budget exceeded");
        const int parts_left = p - static_cast<int>(stars.size());
        if (remaining == 0) return parts_left == 0;
        if (parts_left <= 0) return false;
        if (remaining < 2 * parts_left || remaining > 5 * parts_left) return false;
        int first = 0;
        while (taken[first]) ++first;
        const Cell u{first / b, first % b};
        std::vector<Cell> centers{u};
        for (int d = 0; d < 4; ++d) {
            const int r = u.first + kDr[d], c = u.second + kDc[d];
            if (in_board(r, c) && !taken[r * b + c]) centers.emplace_back(r, c);
        }
        for (const Cell& ctr : centers) {
            std::vector<Cell> avail;
            for (int d = 0; d < 4; ++d) {
                const int r = ctr.first + kDr[d], c = ctr.second + kDc[d];
                if (in_board(r, c) && !taken[r * b + c] && !(Cell{r, c} == u))
                    avail.emplace_back(r, c);
            }
            const bool ctr_is_u = (ctr == u);
            const int na = static_cast<int>(avail.size());
            for (std::uint32_t mask = 0; mask < (1u << na); ++mask) {
                std::vector<Cell> star{ctr};
                if (!ctr_is_u) star.push_back(u);
                for (int i = 0; i < na; ++i)
                    if ((mask >> i) & 1) star.push_back(avail[i]);
                if (star.size() < 2) continue;
                for (const Cell& x : star) taken[cell_id(b, x)] = 1;
                remaining -= static_cast<int>(star.size());
                stars.push_back(star);
                if (self(self)) return true;
                stars.pop_back();
                remaining += static_cast<int>(star.size());
                for (const Cell& x : star) taken[cell_id(b, x)] = 0;
            }
        }
        return false;
    };
    if (!rec(rec)) return std::nullopt;
    return stars_to_assignment(a, b, stars);
}

std::string render_board(int a, int b, const Assignment& assignment) {
    check_board(a, b);
    if (static_cast<int>(assignment.types.size()) != a * b)
        throw precondition_error("render: assignment does not match board");
    std::ostringstream out;
    for (int r = 0; r < a; ++r) {
        for (int c = 0; c < b; ++c)
            out << static_cast<int>(assignment.types[r * b + c]);
        out << '\n';
    }
    return out.str();
}

} // namespace imioa
