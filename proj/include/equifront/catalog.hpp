#pragma once

#include <string>
#include <vector>

#include "equifront/front.hpp"
#include "equifront/grid.hpp"

namespace equifront {

class UnsupportedParameter : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Named examples. Expected tb values are part of the entries and re-verified
// by the test suite.
FrontWord cat_unknot();   // [AL AR], tb -1
FrontWord cat_u_s();      // S-stabilization at the right cusp, tb -2
FrontWord cat_u_t();      // T-stabilization at the right cusp, tb -2

// Two-strand torus family: n >= 0 gives the (2, 2n+1) positive twist region,
// n < 0 the representative with 2|n|+1 negative crossings. |n| <= 8.
FrontWord cat_torus(int n);
int torus_expected_tb(int n);

// Twist-knot family, m != -1 (that case is the unknot). |m| <= 8.
FrontWord cat_twist(int m);
int twist_expected_tb(int m);

Grid cat_m9_44_grid();
PlainWord cat_k1_front();  // non-symmetric comparandum, plain container
FrontWord cat_k2_front();  // transvergent representative, tb -3

struct CatalogEntry {
    std::string name;
    std::string params;
    bool is_grid = false;
    bool is_plain = false;
    FrontWord front;
    PlainWord plain;
    Grid grid;
    int expected_tb = 0;
    bool has_tb = true;
    std::string provenance;
};

std::vector<CatalogEntry> catalog_entries();
// Lookup by name with optional parameter ("torus", "n=2").
CatalogEntry catalog_emit(const std::string& name, const std::string& params);

}  // namespace equifront
