#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equifront/front.hpp"
#include "equifront/laurent.hpp"

namespace equifront {

class InvalidGrid : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// n x n grid diagram: one X and one O per row and per column, X != O.
// Row 0 is the top row. Symmetric means the marking sets are invariant under
// reflection through the NW-SE diagonal (r,c) -> (c,r), allowing X and O to
// swap roles as a pair.
struct Grid {
    int n = 0;
    std::vector<int> xs;  // xs[row] = column of X
    std::vector<int> os;  // os[row] = column of O

    bool operator==(const Grid&) const = default;
};

void require_valid(const Grid& g);
bool is_symmetric(const Grid& g);

// Serialization: "grid v1 n" header then "X r c" / "O r c" lines, row 0 top.
std::string emit_grid(const Grid& g);
Grid parse_grid(const std::string& text);

// 45-degree rotation of the grid: verticals become the over/descending
// strands, NE/SW-type corners become cusps. Always yields a plain front;
// for symmetric grids the transvergent fold is also produced.
PlainWord grid_to_plain_front(const Grid& g);
std::optional<FrontWord> grid_to_front(const Grid& g);

// Direct corner-count formulas, independent of the conversion route.
int grid_tb_direct(const Grid& g);
int grid_rot_direct(const Grid& g);
int grid_writhe(const Grid& g);

struct GridSearchResult {
    bool found = false;
    Grid witness;
    int n = 0;
    long long examined = 0;
};

// Smallest n <= n_max admitting a symmetric grid whose front has the target
// writhe-corrected bracket (filter-level identification only).
GridSearchResult equivariant_grid_search(const Laurent& target_jones_A, int n_max,
                                         int threads = 1);

}  // namespace equifront
