#pragma once

#include "equifront/front.hpp"

namespace equifront {

enum class StabKind : uint8_t { S, T };
inline StabKind bar(StabKind z) { return z == StabKind::S ? StabKind::T : StabKind::S; }

class NoSuchArc : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// True iff the cusp's pointing matches its kind; every on-axis cusp this word
// model can represent is standard.
bool is_standard(const FrontWord& w, int cusp_col);

struct StabResult {
    FrontWord word;
    int descendant_cusp;  // column index of the designated on-axis cusp
};

// Front-level stabilization at an on-axis cusp: tb drops by exactly 1.
//   S: AL -> PL1 AR, AR -> AL PR1;  T: AL -> AL AX, AR -> AX AR
StabResult stabilize_front(const FrontWord& w, int cusp_col, StabKind kind);

// Link-level stabilization: uses kind when the cusp is standard, bar(kind)
// otherwise (Def-4.3-style indirection; constant path in this model).
StabResult stabilize_link(const FrontWord& w, int cusp_col, StabKind kind);

// Mirrored zig-zag pair on an above-axis arc; tb drops by 2. The arc is
// addressed by (column gap, level): the zig-zag is spliced before column
// `at_col` on the strand at `level`. side > 0 wiggles outward, < 0 inward.
FrontWord insert_zigzag_pair(const FrontWord& w, int at_col, int level, int side);

}  // namespace equifront
