#include "equifront/grid.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <thread>

#include "equifront/diagram.hpp"
#include "equifront/invariants.hpp"

namespace equifront {

void require_valid(const Grid& g) {
    if (g.n < 2) throw InvalidGrid("grid size must be at least 2");
    if (static_cast<int>(g.xs.size()) != g.n || static_cast<int>(g.os.size()) != g.n)
        throw InvalidGrid("marking vectors must have length n");
    std::vector<int> seenx(g.n, 0), seeno(g.n, 0);
    for (int r = 0; r < g.n; ++r) {
        if (g.xs[r] < 0 || g.xs[r] >= g.n || g.os[r] < 0 || g.os[r] >= g.n)
            throw InvalidGrid("marking column out of range in row " + std::to_string(r));
        if (g.xs[r] == g.os[r]) throw InvalidGrid("X and O coincide in row " + std::to_string(r));
        seenx[g.xs[r]]++;
        seeno[g.os[r]]++;
    }
    for (int c = 0; c < g.n; ++c)
        if (seenx[c] != 1 || seeno[c] != 1)
            throw InvalidGrid("column " + std::to_string(c) + " does not have one X and one O");
}

bool is_symmetric(const Grid& g) {
    require_valid(g);
    auto is_involution_pair = [&](const std::vector<int>& a) {
        for (int r = 0; r < g.n; ++r)
            if (a[a[r]] != r) return false;
        return true;
    };
    if (is_involution_pair(g.xs) && is_involution_pair(g.os)) return true;
    // transpose swaps the X and O roles
    for (int r = 0; r < g.n; ++r)
        if (g.os[g.xs[r]] != r || g.xs[g.os[r]] != r) return false;
    return true;
}

std::string emit_grid(const Grid& g) {
    std::ostringstream os;
    os << "grid v1 " << g.n << "\n";
    for (int r = 0; r < g.n; ++r) os << "X " << r << " " << g.xs[r] << "\n";
    for (int r = 0; r < g.n; ++r) os << "O " << r << " " << g.os[r] << "\n";
    return os.str();
}

Grid parse_grid(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int line_no = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(is, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) return true;
        }
        return false;
    };
    if (!next_line()) throw ParseError("empty input", 0);
    std::istringstream hs(line);
    std::string magic, ver;
    int n = 0;
    if (!(hs >> magic >> ver >> n) || magic != "grid" || ver != "v1" || n < 1)
        throw ParseError("expected header 'grid v1 <n>'", line_no);
    Grid g;
    g.n = n;
    g.xs.assign(n, -1);
    g.os.assign(n, -1);
    while (next_line()) {
        std::istringstream ts(line);
        std::string kind;
        int r, c;
        if (!(ts >> kind >> r >> c) || (kind != "X" && kind != "O"))
            throw ParseError("unknown grid line '" + line + "'", line_no);
        if (r < 0 || r >= n || c < 0 || c >= n) throw ParseError("marking out of range", line_no);
        (kind == "X" ? g.xs : g.os)[r] = c;
    }
    require_valid(g);
    return g;
}

namespace {

// Rotated sweep: x' = r + c, z' = c - r. Verticals descend (over), horizontals
// ascend. Corner types with branches extending {W,N} are right cusps, {E,S}
// left cusps, the other two smooth turns.
struct Seg {
    bool vertical;
    int fixed;           // column for verticals, row for horizontals
    long long zp(int xp) const { return vertical ? 2LL * fixed - xp : xp - 2LL * fixed; }
};

struct Ev {
    int xp;
    int zp;
    enum Kind { CuspL, CuspR, Cross } kind;
    int r, c;
};

struct GridSweep {
    PlainWord plain;
    std::vector<int8_t> arc_dir;     // grid-induced orientation per plain arc
    std::vector<Ev> events;
    bool built = false;
};

GridSweep sweep(const Grid& g) {
    require_valid(g);
    const int n = g.n;
    std::vector<int> col_x(n), col_o(n);
    for (int r = 0; r < n; ++r) {
        col_x[g.xs[r]] = r;
        col_o[g.os[r]] = r;
    }
    std::vector<Ev> evs;
    auto corner_kind = [&](int r, int c) {
        int other_c = (g.xs[r] == c) ? g.os[r] : g.xs[r];
        int other_r = (col_x[c] == r) ? col_o[c] : col_x[c];
        bool east = other_c > c;   // horizontal branch direction
        bool south = other_r > r;  // vertical branch direction
        if (!east && !south) return Ev::CuspR;  // {W,N}
        if (east && south) return Ev::CuspL;    // {E,S}
        return Ev::Kind(-1);
    };
    for (int r = 0; r < n; ++r)
        for (int c : {g.xs[r], g.os[r]}) {
            auto k = corner_kind(r, c);
            if (k == Ev::CuspL || k == Ev::CuspR) evs.push_back({r + c, c - r, k, r, c});
        }
    for (int c = 0; c < n; ++c) {
        int r1 = std::min(col_x[c], col_o[c]), r2 = std::max(col_x[c], col_o[c]);
        for (int r = r1 + 1; r < r2; ++r) {
            int c1 = std::min(g.xs[r], g.os[r]), c2 = std::max(g.xs[r], g.os[r]);
            if (c1 < c && c < c2) evs.push_back({r + c, c - r, Ev::Cross, r, c});
        }
    }
    std::sort(evs.begin(), evs.end(), [](const Ev& a, const Ev& b) {
        return a.xp != b.xp ? a.xp < b.xp : a.zp < b.zp;
    });

    GridSweep out;
    out.events = evs;
    struct Live {
        Seg seg;
        int arc;
    };
    std::vector<Live> live;  // bottom-to-top by z'
    auto new_arc = [&](int8_t dir) {
        out.arc_dir.push_back(dir);
        return static_cast<int>(out.arc_dir.size()) - 1;
    };
    // grid orientation: verticals X -> O, horizontals O -> X; rightward in the
    // rotated picture means increasing x'.
    auto vert_dir = [&](int c) { return static_cast<int8_t>(col_o[c] > col_x[c] ? 1 : -1); };
    auto horiz_dir = [&](int r) { return static_cast<int8_t>(g.xs[r] > g.os[r] ? 1 : -1); };

    for (const Ev& e : evs) {
        auto zp_less = [&](const Live& l) { return l.seg.zp(e.xp) < e.zp; };
        switch (e.kind) {
            case Ev::CuspL: {
                int pos = static_cast<int>(std::count_if(live.begin(), live.end(), zp_less));
                Seg vert{true, e.c}, horiz{false, e.r};
                Live lo{vert, new_arc(vert_dir(e.c))};   // descending branch
                Live hi{horiz, new_arc(horiz_dir(e.r))};  // ascending branch
                live.insert(live.begin() + pos, {lo, hi});
                out.plain.cols.push_back({PlainKind::CuspL, pos + 1});
                break;
            }
            case Ev::CuspR: {
                auto find = [&](bool vertical, int fixed) {
                    for (size_t i = 0; i < live.size(); ++i)
                        if (live[i].seg.vertical == vertical && live[i].seg.fixed == fixed)
                            return static_cast<int>(i);
                    throw InvalidGrid("internal sweep error: segment not live");
                };
                int iv = find(true, e.c), ih = find(false, e.r);
                int lo = std::min(iv, ih);
                if (std::max(iv, ih) != lo + 1)
                    throw InvalidGrid("internal sweep error: cusp strands not adjacent");
                live.erase(live.begin() + lo, live.begin() + lo + 2);
                out.plain.cols.push_back({PlainKind::CuspR, lo + 1});
                break;
            }
            case Ev::Cross: {
                // horizontal below, vertical above just left of the crossing
                int pos = static_cast<int>(std::count_if(live.begin(), live.end(), zp_less));
                // pos counts strands strictly below z'(event); the two crossing
                // strands have z' equal to the event's z' here
                int i = pos;
                if (i + 1 >= static_cast<int>(live.size()))
                    throw InvalidGrid("internal sweep error: crossing strands missing");
                Live a = live[i], b = live[i + 1];
                if (!(a.seg.vertical == false && a.seg.fixed == e.r && b.seg.vertical == true &&
                      b.seg.fixed == e.c))
                    throw InvalidGrid("internal sweep error: crossing strands mismatched");
                // strands continue through; arcs are split like the diagram does
                Live asc_out{a.seg, new_arc(out.arc_dir[a.arc])};
                Live desc_out{b.seg, new_arc(out.arc_dir[b.arc])};
                live[i] = desc_out;
                live[i + 1] = asc_out;
                out.plain.cols.push_back({PlainKind::Cross, i + 1});
                break;
            }
        }
    }
    if (!live.empty()) throw InvalidGrid("internal sweep error: strands left over");
    out.built = true;
    return out;
}

}  // namespace

PlainWord grid_to_plain_front(const Grid& g) { return sweep(g).plain; }

std::optional<FrontWord> grid_to_front(const Grid& g) {
    if (!is_symmetric(g)) return std::nullopt;
    GridSweep sw = sweep(g);
    // replay the plain sweep, emitting symmetric columns for axis events and
    // above-half events only
    FrontWord w;
    int live_total = 0, live_below = 0;
    size_t ei = 0;
    for (const PlainCol& pc : sw.plain.cols) {
        const Ev& e = sw.events[ei++];
        int pos = pc.pos;
        if (e.zp == 0) {
            if (e.kind == Ev::CuspL) w.cols.push_back({ColKind::AxisCuspL, 0});
            if (e.kind == Ev::CuspR) w.cols.push_back({ColKind::AxisCuspR, 0});
            if (e.kind == Ev::Cross) w.cols.push_back({ColKind::AxisCross, 0});
        } else if (e.zp > 0) {
            int level = pos - live_below;
            if (e.kind == Ev::CuspL) w.cols.push_back({ColKind::PairCuspL, level});
            if (e.kind == Ev::CuspR) w.cols.push_back({ColKind::PairCuspR, level});
            if (e.kind == Ev::Cross) w.cols.push_back({ColKind::PairCross, level});
        }
        // maintain live counts
        if (e.kind == Ev::CuspL) {
            live_total += 2;
            if (e.zp < 0) live_below += 2;
            if (e.zp == 0) live_below += 1;
        } else if (e.kind == Ev::CuspR) {
            live_total -= 2;
            if (e.zp < 0) live_below -= 2;
            if (e.zp == 0) live_below -= 1;
        }
    }
    auto rep = validate(w);
    if (!rep.valid) throw InvalidGrid("symmetric grid did not fold into a valid front: " + rep.error);
    return w;
}

int grid_writhe(const Grid& g) {
    GridSweep sw = sweep(g);
    Diagram d = build_diagram(sw.plain);
    return writhe(d, sw.arc_dir);
}

int grid_tb_direct(const Grid& g) {
    require_valid(g);
    const int n = g.n;
    std::vector<int> col_x(n), col_o(n);
    for (int r = 0; r < n; ++r) {
        col_x[g.xs[r]] = r;
        col_o[g.os[r]] = r;
    }
    Diagram d = build_diagram(grid_to_plain_front(g));
    if (d.ncomps != 1) throw MultiComponent("tb needs a single component");
    int cusps = 0;
    for (int r = 0; r < n; ++r)
        for (int c : {g.xs[r], g.os[r]}) {
            int other_c = (g.xs[r] == c) ? g.os[r] : g.xs[r];
            int other_r = (col_x[c] == r) ? col_o[c] : col_x[c];
            bool east = other_c > c, south = other_r > r;
            if (east == south) ++cusps;  // {E,S} or {W,N}
        }
    return grid_writhe(g) - cusps / 2;
}

int grid_rot_direct(const Grid& g) {
    require_valid(g);
    const int n = g.n;
    std::vector<int> col_x(n), col_o(n);
    for (int r = 0; r < n; ++r) {
        col_x[g.xs[r]] = r;
        col_o[g.os[r]] = r;
    }
    int up = 0, down = 0;
    for (int r = 0; r < n; ++r)
        for (int c : {g.xs[r], g.os[r]}) {
            int other_c = (g.xs[r] == c) ? g.os[r] : g.xs[r];
            int other_r = (col_x[c] == r) ? col_o[c] : col_x[c];
            bool east = other_c > c, south = other_r > r;
            if (east != south) continue;  // smooth corner
            bool up_cusp;
            if (east) {
                // left cusp: lower branch is the vertical; up iff it heads into
                // the corner, i.e. the corner is the vertical's O end and the
                // vertical points north, or X end pointing... the vertical runs
                // X -> O, so "into the corner" means the corner holds the O.
                up_cusp = g.os[r] == c;
            } else {
                // right cusp: lower branch is the horizontal (O -> X); into the
                // corner means the corner holds the X.
                up_cusp = g.xs[r] == c;
            }
            (up_cusp ? up : down)++;
        }
    return (down - up) / 2;
}

GridSearchResult equivariant_grid_search(const Laurent& target_jones_A, int n_max, int threads) {
    if (n_max > 8) throw BudgetExceeded("grid search bound is 8");
    GridSearchResult res;
    for (int n = 2; n <= n_max; ++n) {
        // involutions of S_n
        std::vector<std::vector<int>> invs;
        std::vector<int> perm(n, -1);
        auto rec = [&](auto&& self, int i) -> void {
            if (i == n) {
                invs.push_back(perm);
                return;
            }
            if (perm[i] >= 0) {
                self(self, i + 1);
                return;
            }
            perm[i] = i;
            self(self, i + 1);
            perm[i] = -1;
            for (int j = i + 1; j < n; ++j) {
                if (perm[j] >= 0) continue;
                perm[i] = j;
                perm[j] = i;
                self(self, i + 1);
                perm[i] = perm[j] = -1;
            }
        };
        rec(rec, 0);

        std::vector<Grid> candidates;
        for (auto& xs : invs)
            for (auto& os : invs) {
                bool ok = true;
                for (int r = 0; r < n && ok; ++r) ok = xs[r] != os[r];
                if (!ok) continue;
                candidates.push_back({n, xs, os});
            }
        // transpose-swaps-roles family: os = xs^{-1}
        {
            std::vector<int> p(n);
            for (int i = 0; i < n; ++i) p[i] = i;
            do {
                std::vector<int> inv(n);
                for (int i = 0; i < n; ++i) inv[p[i]] = i;
                bool ok = true;
                for (int r = 0; r < n && ok; ++r) ok = p[r] != inv[r];
                if (ok) candidates.push_back({n, p, inv});
            } while (std::next_permutation(p.begin(), p.end()));
        }
        std::sort(candidates.begin(), candidates.end(),
                  [](const Grid& a, const Grid& b) { return std::tie(a.xs, a.os) < std::tie(b.xs, b.os); });
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

        std::vector<char> hit(candidates.size(), 0);
        std::atomic<long long> examined{0};
        auto worker = [&](int tid) {
            for (size_t i = tid; i < candidates.size(); i += threads) {
                examined++;
                try {
                    PlainWord pw = grid_to_plain_front(candidates[i]);
                    Diagram d = build_diagram(pw);
                    if (d.ncomps != 1) continue;
                    if (jones_in_A_plain(pw) == target_jones_A) hit[i] = 1;
                } catch (const std::exception&) {
                }
            }
        };
        if (threads <= 1) {
            worker(0);
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
            for (auto& th : pool) th.join();
        }
        res.examined += examined.load();
        for (size_t i = 0; i < candidates.size(); ++i) {
            if (!hit[i]) continue;
            res.found = true;
            res.witness = candidates[i];
            res.n = n;
            return res;
        }
    }
    return res;
}

}  // namespace equifront
