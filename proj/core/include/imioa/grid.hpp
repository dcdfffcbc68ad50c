#ifndef IMIOA_GRID_HPP
#define IMIOA_GRID_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "imioa/assignment.hpp"

namespace imioa {

// Cells of the a x b board, (row, col), mapped row-major onto gen_grid ids.
using Cell = std::pair<int, int>;

struct PentominoPacking {
    int count = 0;                 // T: max disjoint X-pentominoes on the board
    std::vector<Cell> centers;     // witness placement
};

// Fragments of X-pentomino footprints (a plus-shaped center + up to 4 arms).
// A fragment is proper when it has >= 2 cells; a connected proper fragment
// always contains its footprint's center.
struct FragmentTiling {
    int a = 0, b = 0;
    std::vector<std::vector<Cell>> fragments;
};

// Exact maximum number of disjoint X-pentominoes fully inside the board,
// by budget-guarded backtracking over center positions. Requires a*b <= 64.
PentominoPacking pack_x_pentominoes(int a, int b,
                                    long long budget = 50'000'000);

// p <= T pentominoes, each a type-1 center surrounded by type-2 arms; the
// integrated set is exactly the 5p footprint cells, so the objective is 5p
// with p type-1 agents.
Assignment construct_5p_placement(int a, int b, int p);

// Clips the plane X-pentomino tiling with centers {(i,j) : i+2j = 0 mod 5}
// to the board. Fragment count <= (a+2)(b+2)/5.
FragmentTiling fragment_tiling_via_pushup(int a, int b);

// Pushup tiling with single-cell fragments merged into neighbors (re-split
// when the merge is not star-shaped). Empty optional if repair fails.
std::optional<FragmentTiling> refine_to_proper(const FragmentTiling& t);

// Minimum proper-fragment count this construction achieves for the board.
// Throws when the board has no proper tiling at all (a*b < 2).
int proper_fragment_count(int a, int b);

// Partition the board into exactly p proper star fragments and put one
// type-1 agent on each fragment's center: every cell integrated, objective
// a*b. Requires proper_fragment_count(a,b) <= p <= a*b/2; returns nullopt
// when the splitter cannot reach exactly p fragments.
std::optional<Assignment> full_integration_placement(
    int a, int b, int p, long long budget = 50'000'000);

// '1'/'2' character grid for docs and debugging.
std::string render_board(int a, int b, const Assignment& assignment);

} // namespace imioa

#endif
