#include "equifront/stabilize.hpp"

namespace equifront {

bool is_standard(const FrontWord& w, int cusp_col) {
    require_valid(w);
    if (cusp_col < 0 || cusp_col >= static_cast<int>(w.cols.size()) ||
        !w.cols[cusp_col].is_axis_cusp())
        throw NoSuchCusp("column " + std::to_string(cusp_col) + " is not an on-axis cusp");
    return true;  // left cusps point left, right cusps point right here
}

StabResult stabilize_front(const FrontWord& w, int cusp_col, StabKind kind) {
    require_valid(w);
    if (cusp_col < 0 || cusp_col >= static_cast<int>(w.cols.size()) ||
        !w.cols[cusp_col].is_axis_cusp())
        throw NoSuchCusp("column " + std::to_string(cusp_col) + " is not an on-axis cusp");
    const bool left = w.cols[cusp_col].kind == ColKind::AxisCuspL;
    std::vector<Column> gadget;
    int descendant_off;
    if (kind == StabKind::S) {
        if (left) {
            gadget = {{ColKind::PairCuspL, 1}, {ColKind::AxisCuspR, 0}};
            descendant_off = 1;
        } else {
            gadget = {{ColKind::AxisCuspL, 0}, {ColKind::PairCuspR, 1}};
            descendant_off = 0;
        }
    } else {
        if (left) {
            gadget = {{ColKind::AxisCuspL, 0}, {ColKind::AxisCross, 0}};
            descendant_off = 0;
        } else {
            gadget = {{ColKind::AxisCross, 0}, {ColKind::AxisCuspR, 0}};
            descendant_off = 1;
        }
    }
    StabResult r;
    r.word.cols = w.cols;
    r.word.cols.erase(r.word.cols.begin() + cusp_col);
    r.word.cols.insert(r.word.cols.begin() + cusp_col, gadget.begin(), gadget.end());
    r.descendant_cusp = cusp_col + descendant_off;
    if (w.anchor) {
        int a = *w.anchor;
        if (a == cusp_col)
            r.word.anchor = r.descendant_cusp;
        else
            r.word.anchor = a > cusp_col ? a + static_cast<int>(gadget.size()) - 1 : a;
    }
    require_valid(r.word);
    return r;
}

StabResult stabilize_link(const FrontWord& w, int cusp_col, StabKind kind) {
    return stabilize_front(w, cusp_col, is_standard(w, cusp_col) ? kind : bar(kind));
}

FrontWord insert_zigzag_pair(const FrontWord& w, int at_col, int level, int side) {
    require_valid(w);
    if (at_col < 0 || at_col > static_cast<int>(w.cols.size()))
        throw NoSuchArc("column gap out of range");
    int k = 0;
    for (int i = 0; i < at_col; ++i) k += col_delta(w.cols[i]);
    if (level < 1 || level > k)
        throw NoSuchArc("no strand at level " + std::to_string(level) + " before column " +
                        std::to_string(at_col));
    FrontWord out = w;
    std::vector<Column> z;
    if (side >= 0)
        z = {{ColKind::PairCuspL, level + 1}, {ColKind::PairCuspR, level}};
    else
        z = {{ColKind::PairCuspL, level}, {ColKind::PairCuspR, level + 1}};
    out.cols.insert(out.cols.begin() + at_col, z.begin(), z.end());
    if (w.anchor && *w.anchor >= at_col) out.anchor = *w.anchor + 2;
    require_valid(out);
    return out;
}

}  // namespace equifront
