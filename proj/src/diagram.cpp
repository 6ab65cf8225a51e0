#include "equifront/diagram.hpp"

#include <algorithm>

namespace equifront {

Diagram build_diagram(const PlainWord& w) {
    Diagram d;
    std::vector<int> slots;  // arc ids bottom-to-top
    auto new_arc = [&](Diagram::End l) {
        d.left_end.push_back(l);
        d.right_end.push_back({});
        return d.narcs++;
    };
    for (size_t i = 0; i < w.cols.size(); ++i) {
        const PlainCol& c = w.cols[i];
        const int p = c.pos;
        switch (c.kind) {
            case PlainKind::CuspL: {
                if (p < 1 || p > static_cast<int>(slots.size()) + 1)
                    throw InvalidWord("cusp position out of range at plain column " + std::to_string(i));
                int idx = static_cast<int>(d.cusps.size());
                int lo = new_arc({Diagram::EndKind::Cusp, idx});
                int hi = new_arc({Diagram::EndKind::Cusp, idx});
                d.cusps.push_back({static_cast<int>(i), true, lo, hi});
                slots.insert(slots.begin() + (p - 1), {lo, hi});
                break;
            }
            case PlainKind::CuspR: {
                if (p < 1 || p + 1 > static_cast<int>(slots.size()))
                    throw InvalidWord("cusp position out of range at plain column " + std::to_string(i));
                int idx = static_cast<int>(d.cusps.size());
                int lo = slots[p - 1], hi = slots[p];
                d.right_end[lo] = {Diagram::EndKind::Cusp, idx};
                d.right_end[hi] = {Diagram::EndKind::Cusp, idx};
                d.cusps.push_back({static_cast<int>(i), false, lo, hi});
                slots.erase(slots.begin() + (p - 1), slots.begin() + (p + 1));
                break;
            }
            case PlainKind::Cross: {
                if (p < 1 || p + 1 > static_cast<int>(slots.size()))
                    throw InvalidWord("crossing position out of range at plain column " + std::to_string(i));
                int idx = static_cast<int>(d.crossings.size());
                int asc_in = slots[p - 1], desc_in = slots[p];
                d.right_end[asc_in] = {Diagram::EndKind::Cross, idx};
                d.right_end[desc_in] = {Diagram::EndKind::Cross, idx};
                int asc_out = new_arc({Diagram::EndKind::Cross, idx});
                int desc_out = new_arc({Diagram::EndKind::Cross, idx});
                d.crossings.push_back({static_cast<int>(i), asc_in, asc_out, desc_in, desc_out});
                slots[p - 1] = desc_out;
                slots[p] = asc_out;
                break;
            }
        }
    }
    if (!slots.empty()) throw InvalidWord("open diagram: strands remain at the end of the word");

    // traverse cycles, assigning components and the default orientation
    d.comp_of_arc.assign(d.narcs, -1);
    d.default_dir.assign(d.narcs, 0);
    auto step = [&](int arc, int dir) -> std::pair<int, int> {
        const Diagram::End& e = dir > 0 ? d.right_end[arc] : d.left_end[arc];
        if (e.kind == Diagram::EndKind::Cusp) {
            const CuspEv& cu = d.cusps[e.index];
            int partner = cu.lower_arc == arc ? cu.upper_arc : cu.lower_arc;
            return {partner, -dir};
        }
        const CrossEv& x = d.crossings[e.index];
        if (dir > 0) return {arc == x.asc_in ? x.asc_out : x.desc_out, 1};
        return {arc == x.asc_out ? x.asc_in : x.desc_in, -1};
    };
    for (int a = 0; a < d.narcs; ++a) {
        if (d.comp_of_arc[a] >= 0) continue;
        int comp = d.ncomps++;
        int arc = a, dir = 1;
        do {
            d.comp_of_arc[arc] = comp;
            d.default_dir[arc] = static_cast<int8_t>(dir);
            auto [na, nd] = step(arc, dir);
            arc = na;
            dir = nd;
        } while (arc != a);
    }
    return d;
}

std::vector<int8_t> Diagram::oriented(const std::vector<bool>& flip_comp) const {
    std::vector<int8_t> dir = default_dir;
    for (int a = 0; a < narcs; ++a)
        if (flip_comp[comp_of_arc[a]]) dir[a] = -dir[a];
    return dir;
}

FrontDiagram build_front_diagram(const FrontWord& w) {
    FrontDiagram fd;
    std::vector<std::vector<int>> plain_cols;
    fd.plain = unfold(w, &plain_cols);
    fd.d = build_diagram(fd.plain);
    // plain column index -> event index
    std::vector<int> cusp_at(fd.plain.cols.size(), -1), cross_at(fd.plain.cols.size(), -1);
    for (size_t i = 0; i < fd.d.cusps.size(); ++i) cusp_at[fd.d.cusps[i].plain_col] = static_cast<int>(i);
    for (size_t i = 0; i < fd.d.crossings.size(); ++i) cross_at[fd.d.crossings[i].plain_col] = static_cast<int>(i);
    fd.cusp_of_col.assign(w.cols.size(), {});
    fd.cross_of_col.assign(w.cols.size(), {});
    for (size_t i = 0; i < w.cols.size(); ++i) {
        for (int pc : plain_cols[i]) {
            if (cusp_at[pc] >= 0) fd.cusp_of_col[i].push_back(cusp_at[pc]);
            if (cross_at[pc] >= 0) fd.cross_of_col[i].push_back(cross_at[pc]);
        }
    }
    return fd;
}

std::vector<ComponentInfo> components(const FrontWord& w) {
    require_valid(w);
    FrontDiagram fd = build_front_diagram(w);
    std::vector<ComponentInfo> out(fd.d.ncomps);
    for (int c = 0; c < fd.d.ncomps; ++c) out[c].id = c;
    for (int a = 0; a < fd.d.narcs; ++a) out[fd.d.comp_of_arc[a]].arcs.push_back(a);
    for (size_t i = 0; i < w.cols.size(); ++i) {
        if (!w.cols[i].is_axis_cusp()) continue;
        const CuspEv& cu = fd.d.cusps[fd.cusp_of_col[i][0]];
        out[fd.d.comp_of_arc[cu.lower_arc]].axis_cusp_cols.push_back(static_cast<int>(i));
    }
    return out;
}

void fill_axis_profile(const FrontWord& w, ValidationReport& r) {
    FrontDiagram fd;
    try {
        fd = build_front_diagram(w);
    } catch (const InvalidWord& e) {
        r.error = e.what();
        return;
    }
    r.component_count = fd.d.ncomps;
    r.axis_cusps_per_component.assign(fd.d.ncomps, 0);
    r.axis_cross_passages_per_component.assign(fd.d.ncomps, 0);
    for (size_t i = 0; i < w.cols.size(); ++i) {
        if (w.cols[i].is_axis_cusp()) {
            const CuspEv& cu = fd.d.cusps[fd.cusp_of_col[i][0]];
            r.axis_cusps_per_component[fd.d.comp_of_arc[cu.lower_arc]]++;
        } else if (w.cols[i].kind == ColKind::AxisCross) {
            const CrossEv& x = fd.d.crossings[fd.cross_of_col[i][0]];
            r.axis_cross_passages_per_component[fd.d.comp_of_arc[x.asc_in]]++;
            r.axis_cross_passages_per_component[fd.d.comp_of_arc[x.desc_in]]++;
        }
    }
}

StrandMarking default_marking(const FrontWord& w) {
    require_valid(w);
    FrontDiagram fd = build_front_diagram(w);
    StrandMarking m;
    m.component_of_arc = fd.d.comp_of_arc;
    m.dir = fd.d.default_dir;
    return m;
}

StrandMarking orient(const FrontWord& w, int anchor_col) {
    require_valid(w);
    if (anchor_col < 0 || anchor_col >= static_cast<int>(w.cols.size()) ||
        !w.cols[anchor_col].is_axis_cusp())
        throw NoSuchCusp("column " + std::to_string(anchor_col) + " is not an on-axis cusp");
    FrontDiagram fd = build_front_diagram(w);
    const CuspEv& cu = fd.d.cusps[fd.cusp_of_col[anchor_col][0]];
    std::vector<bool> flip(fd.d.ncomps, false);
    // the above-axis branch of the anchor runs along the oriented axis
    if (fd.d.default_dir[cu.upper_arc] < 0) flip[fd.d.comp_of_arc[cu.upper_arc]] = true;
    StrandMarking m;
    m.component_of_arc = fd.d.comp_of_arc;
    m.dir = fd.d.oriented(flip);
    m.anchor_col = anchor_col;
    return m;
}

}  // namespace equifront
