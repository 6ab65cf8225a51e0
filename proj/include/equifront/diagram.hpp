#pragma once

#include <optional>
#include <vector>

#include "equifront/front.hpp"

namespace equifront {

// Resolved diagram of a plain word: arcs, cusps and crossings with the
// over/under forced by the front slope convention (the strand of lower
// slope is the over-strand, i.e. the relatively descending one).
struct CuspEv {
    int plain_col;
    bool left;
    int lower_arc;
    int upper_arc;
};

struct CrossEv {
    int plain_col;
    int asc_in, asc_out;    // strand entering at the lower slot (ascending)
    int desc_in, desc_out;  // strand entering at the upper slot (over)
};

struct Diagram {
    int narcs = 0;
    std::vector<CuspEv> cusps;
    std::vector<CrossEv> crossings;

    // arc endpoints: (event kind, event index) or none at the word boundary
    enum class EndKind : uint8_t { None, Cusp, Cross };
    struct End {
        EndKind kind = EndKind::None;
        int index = -1;
    };
    std::vector<End> left_end, right_end;

    std::vector<int> comp_of_arc;
    int ncomps = 0;

    // Default orientation: each component traversed so that its lowest arc id
    // is directed left-to-right. dir[arc] = +1 rightward, -1 leftward.
    std::vector<int8_t> default_dir;

    // Reverse orientation of the given components on a direction vector.
    std::vector<int8_t> oriented(const std::vector<bool>& flip_comp) const;

    int crossing_sign(const CrossEv& x, const std::vector<int8_t>& dir) const {
        return dir[x.asc_in] * dir[x.desc_in];
    }
    bool cusp_up(const CuspEv& c, const std::vector<int8_t>& dir) const {
        return c.left ? dir[c.upper_arc] > 0 : dir[c.lower_arc] > 0;
    }
};

Diagram build_diagram(const PlainWord& w);

// Front-level view: maps front columns to diagram objects.
struct FrontDiagram {
    Diagram d;
    PlainWord plain;
    // cusp/crossing index in d per front column; pair columns map to
    // {below half, above half}, axis columns to a single entry.
    std::vector<std::vector<int>> cusp_of_col;
    std::vector<std::vector<int>> cross_of_col;
};

FrontDiagram build_front_diagram(const FrontWord& w);

// Component id, arc list and on-axis cusp columns per component.
struct ComponentInfo {
    int id;
    std::vector<int> arcs;
    std::vector<int> axis_cusp_cols;
};
std::vector<ComponentInfo> components(const FrontWord& w);

struct StrandMarking {
    std::vector<int> component_of_arc;
    std::vector<int8_t> dir;  // +1 arc directed rightward
    std::optional<int> anchor_col;
};

// Orientation determined by a marked on-axis cusp: the anchor's above-axis
// branch is directed along the positively oriented axis; other components
// get the lowest-arc-id-rightward default.
StrandMarking orient(const FrontWord& w, int anchor_col);
StrandMarking default_marking(const FrontWord& w);

// Used by validate(): component count plus per-component axis-cusp and
// axis-crossing-passage profiles. Sets r.error instead of throwing.
void fill_axis_profile(const FrontWord& w, ValidationReport& r);

}  // namespace equifront
