#include "equifront/invariants.hpp"

#include <algorithm>

namespace equifront {

FrontDiagram resolve_crossings(const FrontWord& w) {
    require_valid(w);
    return build_front_diagram(w);
}

int writhe(const Diagram& d, const std::vector<int8_t>& dir) {
    int w = 0;
    for (auto& x : d.crossings) w += d.crossing_sign(x, dir);
    return w;
}

int cusp_count(const Diagram& d) { return static_cast<int>(d.cusps.size()); }

int rotation_of(const Diagram& d, const std::vector<int8_t>& dir) {
    int up = 0, down = 0;
    for (auto& c : d.cusps) (d.cusp_up(c, dir) ? up : down)++;
    return (down - up) / 2;
}

int plain_tb(const PlainWord& w) {
    Diagram d = build_diagram(w);
    if (d.ncomps != 1) throw MultiComponent("tb needs a single component");
    return writhe(d, d.default_dir) - cusp_count(d) / 2;
}

int plain_rotation(const PlainWord& w, const std::vector<int8_t>& dir) {
    Diagram d = build_diagram(w);
    return rotation_of(d, dir);
}

int thurston_bennequin(const FrontWord& w) {
    require_valid(w);
    FrontDiagram fd = build_front_diagram(w);
    if (fd.d.ncomps != 1) throw MultiComponent("tb needs a single component");
    return writhe(fd.d, fd.d.default_dir) - cusp_count(fd.d) / 2;
}

int rotation(const FrontWord& w, const StrandMarking& m) {
    require_valid(w);
    FrontDiagram fd = build_front_diagram(w);
    return rotation_of(fd.d, m.dir);
}

int anchored_rotation(const FrontWord& w, int anchor_col) {
    StrandMarking m = orient(w, anchor_col);
    return rotation(w, m);
}

namespace {

Laurent delta() {
    Laurent d;
    d += Laurent(-1, 2);
    d += Laurent(-1, -2);
    return d;
}

// Planar tangle sweep: states are non-crossing perfect matchings of the open
// endpoints, with Laurent coefficients. Cusps are cups/caps; a crossing
// splits into the cap-cup smoothing (A) and the pass-through smoothing (1/A).
struct TangleStates {
    std::map<std::vector<int>, Laurent> states;

    void start() { states[{}] = Laurent::one(); }

    static void insert_pair(std::vector<int>& m, int i) {
        for (auto& v : m)
            if (v >= i) v += 2;
        m.insert(m.begin() + i, {i + 1, i});
    }

    static void close_pair(std::vector<int>& m, int i, int* loops) {
        int a = m[i], b = m[i + 1];
        if (a == i + 1) {
            ++*loops;
        } else {
            m[a] = b;
            m[b] = a;
        }
        m.erase(m.begin() + i, m.begin() + i + 2);
        for (auto& v : m)
            if (v > i + 1) v -= 2;
    }

    void cusp_l(int pos) {
        std::map<std::vector<int>, Laurent> next;
        for (auto& [m, c] : states) {
            std::vector<int> nm = m;
            insert_pair(nm, pos - 1);
            next[nm] += c;
        }
        states.swap(next);
    }

    void cusp_r(int pos) {
        Laurent dl = delta();
        std::map<std::vector<int>, Laurent> next;
        for (auto& [m, c] : states) {
            std::vector<int> nm = m;
            int loops = 0;
            close_pair(nm, pos - 1, &loops);
            Laurent nc = c;
            for (int t = 0; t < loops; ++t) nc = nc * dl;
            next[nm] += nc;
        }
        states.swap(next);
    }

    void cross(int pos, bool asc_over) {
        // descending-over (the front convention): the A-smoothing joins the
        // regions swept by rotating the over-strand counterclockwise, which is
        // the pass-through; an ascending over-strand swaps the two.
        Laurent dl = delta();
        const Laurent capcup_c(1, asc_over ? 1 : -1);
        const Laurent pass_c(1, asc_over ? -1 : 1);
        std::map<std::vector<int>, Laurent> next;
        for (auto& [m, c] : states) {
            {
                std::vector<int> nm = m;
                int loops = 0;
                close_pair(nm, pos - 1, &loops);
                insert_pair(nm, pos - 1);
                Laurent nc = c * capcup_c;
                for (int t = 0; t < loops; ++t) nc = nc * dl;
                next[nm] += nc;
            }
            next[m] += c * pass_c;
        }
        // drop cancelled states
        for (auto it = next.begin(); it != next.end();)
            it = it->second.is_zero() ? next.erase(it) : std::next(it);
        states.swap(next);
    }
};

}  // namespace

Laurent kauffman_bracket_plain_bits(const PlainWord& w, const std::vector<bool>& asc_over,
                                    int crossing_bound) {
    int nx = 0;
    for (auto& c : w.cols) nx += c.kind == PlainKind::Cross;
    if (nx > crossing_bound)
        throw TooManyCrossings("diagram has " + std::to_string(nx) + " crossings, bound " +
                               std::to_string(crossing_bound));
    build_diagram(w);  // structural check
    TangleStates ts;
    ts.start();
    size_t xi = 0;
    for (auto& c : w.cols) {
        switch (c.kind) {
            case PlainKind::CuspL: ts.cusp_l(c.pos); break;
            case PlainKind::CuspR: ts.cusp_r(c.pos); break;
            case PlainKind::Cross: {
                bool b = xi < asc_over.size() && asc_over[xi];
                ++xi;
                ts.cross(c.pos, b);
                break;
            }
        }
    }
    if (ts.states.size() != 1 || !ts.states.begin()->first.empty())
        throw InvalidWord("tangle sweep did not close");
    return ts.states.begin()->second.divide_exact(delta());
}

Laurent kauffman_bracket_plain(const PlainWord& w, int crossing_bound) {
    return kauffman_bracket_plain_bits(w, {}, crossing_bound);
}

Laurent kauffman_bracket(const FrontWord& w, int crossing_bound) {
    require_valid(w);
    return kauffman_bracket_plain(unfold(w), crossing_bound);
}

int writhe_bits(const Diagram& d, const std::vector<int8_t>& dir,
                const std::vector<bool>& asc_over) {
    int w = 0;
    for (size_t i = 0; i < d.crossings.size(); ++i) {
        int s = d.crossing_sign(d.crossings[i], dir);
        if (i < asc_over.size() && asc_over[i]) s = -s;
        w += s;
    }
    return w;
}

Laurent jones_in_A_plain_bits(const PlainWord& w, const std::vector<bool>& asc_over,
                              int crossing_bound) {
    Diagram d = build_diagram(w);
    if (d.ncomps != 1) throw MultiComponent("writhe normalization needs a single component");
    int wr = writhe_bits(d, d.default_dir, asc_over);
    Laurent b = kauffman_bracket_plain_bits(w, asc_over, crossing_bound);
    Laurent corr = Laurent(wr % 2 == 0 ? 1 : -1, -3 * wr);
    return corr * b;
}

Laurent jones_in_A_plain(const PlainWord& w, int crossing_bound) {
    return jones_in_A_plain_bits(w, {}, crossing_bound);
}

Laurent jones_in_A(const FrontWord& w, int crossing_bound) {
    require_valid(w);
    return jones_in_A_plain(unfold(w), crossing_bound);
}

Laurent jones_in_t(const Laurent& jones_A) {
    // t = A^(-4)
    return jones_A.invert_variable().scale_exponents_down(4);
}

InvariantRecord invariants(const FrontWord& w) {
    require_valid(w);
    FrontDiagram fd = build_front_diagram(w);
    InvariantRecord r;
    r.component_count = fd.d.ncomps;
    r.cusp_count = cusp_count(fd.d);
    r.writhe = writhe(fd.d, fd.d.default_dir);
    int up = 0, down = 0;
    for (auto& c : fd.d.cusps) (fd.d.cusp_up(c, fd.d.default_dir) ? up : down)++;
    r.up_cusps = up;
    r.down_cusps = down;
    r.rot = (down - up) / 2;
    r.tb = r.writhe - r.cusp_count / 2;
    for (size_t i = 0; i < w.cols.size(); ++i)
        if (w.cols[i].is_axis_cusp())
            r.rot_anchored[static_cast<int>(i)] = anchored_rotation(w, static_cast<int>(i));
    return r;
}

}  // namespace equifront
