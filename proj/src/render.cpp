#include "equifront/render.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace equifront {

namespace {

// Strand heights: level j sits at z = j - 0.5 above the axis, mirrored below.
double level_z(int level, bool above) { return (above ? 1 : -1) * (level - 0.5); }

struct Canvas {
    int w, h;
    std::vector<std::string> rows;
    Canvas(int w_, int h_) : w(w_), h(h_), rows(h_, std::string(w_, ' ')) {}
    void put(int x, int y, char ch) {
        if (x >= 0 && x < w && y >= 0 && y < h) rows[y][x] = ch;
    }
    std::string str() const {
        std::string s;
        for (auto& r : rows) {
            std::string t = r;
            while (!t.empty() && t.back() == ' ') t.pop_back();
            s += t;
            s += '\n';
        }
        return s;
    }
};

struct AsciiFront {
    // rows indexed by 2*z offset from the top; axis row in the middle
    int maxk;
    int ncols;
    Canvas cv;
    AsciiFront(int maxk_, int ncols_)
        : maxk(maxk_), ncols(ncols_), cv(4 * std::max(ncols_, 1) + 3, 4 * std::max(maxk_, 1) + 1) {}
    int row_of(double z) const { return static_cast<int>(std::lround(2 * maxk - 2 * z)); }
    int col_of(double x) const { return static_cast<int>(std::lround(4 * x + 2)); }
};

std::string ascii_front(const FrontWord& w, const RenderOptions& opt, const SmoothWord* smooth) {
    int k = 0, maxk = 1;
    for (auto& c : w.cols) {
        k += col_delta(c);
        maxk = std::max(maxk, k);
    }
    AsciiFront a(maxk, static_cast<int>(w.cols.size()));
    if (opt.show_axis)
        for (int x = 0; x < a.cv.w; ++x) a.cv.put(x, a.row_of(0), '.');
    k = 0;
    for (size_t i = 0; i <= w.cols.size(); ++i) {
        // strands in the gap before column i
        int x0 = static_cast<int>(4 * i);
        for (int j = 1; j <= k; ++j)
            for (int dx = 0; dx < 2; ++dx) {
                a.cv.put(x0 + dx, a.row_of(level_z(j, true)), '-');
                a.cv.put(x0 + dx, a.row_of(level_z(j, false)), '-');
            }
        if (i == w.cols.size()) break;
        const Column& c = w.cols[i];
        int xc = a.col_of(static_cast<double>(i));
        bool vt = smooth && !smooth->cols[i].is_crossing();
        char lglyph = vt ? '(' : '<';
        char rglyph = vt ? ')' : '>';
        switch (c.kind) {
            case ColKind::AxisCuspL:
                a.cv.put(xc, a.row_of(0), lglyph);
                a.cv.put(xc + 1, a.row_of(0.5), '`');
                a.cv.put(xc + 1, a.row_of(-0.5), ',');
                break;
            case ColKind::AxisCuspR:
                a.cv.put(xc, a.row_of(0), rglyph);
                a.cv.put(xc - 1, a.row_of(0.5), '\'');
                a.cv.put(xc - 1, a.row_of(-0.5), ',');
                break;
            case ColKind::AxisCross:
                a.cv.put(xc, a.row_of(0), 'X');
                break;
            case ColKind::PairCuspL:
                a.cv.put(xc, a.row_of(c.level), lglyph);
                a.cv.put(xc, a.row_of(-c.level), lglyph);
                break;
            case ColKind::PairCuspR:
                a.cv.put(xc, a.row_of(c.level), rglyph);
                a.cv.put(xc, a.row_of(-c.level), rglyph);
                break;
            case ColKind::PairCross:
                a.cv.put(xc, a.row_of(c.level), 'X');
                a.cv.put(xc, a.row_of(-c.level), 'X');
                break;
        }
        // spectator level shifts drawn as slants
        int d = col_delta(c);
        if (d != 0) {
            int from = col_need(c) + 1;
            for (int j = from; j <= k; ++j) {
                char ch = d > 0 ? '\\' : '/';
                a.cv.put(xc + 1, a.row_of(level_z(j, true) + 0.25 * d), ch == '\\' ? '/' : '\\');
                a.cv.put(xc + 1, a.row_of(level_z(j, false) - 0.25 * d), ch);
            }
        }
        if (opt.labels) a.cv.put(xc, a.cv.h - 1, static_cast<char>('0' + (i % 10)));
        k += d;
    }
    return a.cv.str();
}

std::string svg_header(double wpx, double hpx) {
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << wpx << "\" height=\"" << hpx
       << "\" viewBox=\"0 0 " << wpx << " " << hpx << "\">\n";
    return os.str();
}

struct SvgFront {
    std::ostringstream body;
    double sc, ox, oy;
    double X(double x) const { return ox + sc * x; }
    double Y(double z) const { return oy - sc * z; }
    void line(double x1, double z1, double x2, double z2, const std::string& style) {
        body << "<line x1=\"" << X(x1) << "\" y1=\"" << Y(z1) << "\" x2=\"" << X(x2) << "\" y2=\""
             << Y(z2) << "\" " << style << "/>\n";
    }
    void tip(double xt, double zt, double xb, double z1, double z2, const std::string& style) {
        body << "<path d=\"M " << X(xb) << " " << Y(z1) << " Q " << X(xt) << " " << Y(zt) << " "
             << X(xb) << " " << Y(z2) << "\" fill=\"none\" " << style << "/>\n";
    }
};

std::string svg_front(const FrontWord& w, const RenderOptions& opt) {
    int k = 0, maxk = 1;
    for (auto& c : w.cols) {
        k += col_delta(c);
        maxk = std::max(maxk, k);
    }
    const double sc = opt.scale;
    SvgFront s;
    s.sc = sc;
    s.ox = sc;
    s.oy = sc * (maxk + 1);
    const std::string stroke = "stroke=\"black\" stroke-width=\"2\"";
    const std::string halo = "stroke=\"white\" stroke-width=\"7\"";
    std::ostringstream out;
    out << svg_header(sc * (w.cols.size() + 2), sc * (2 * maxk + 2));
    if (opt.show_axis)
        s.line(-0.5, 0, w.cols.size() + 0.5, 0, "stroke=\"red\" stroke-width=\"0.7\"");
    k = 0;
    for (size_t i = 0; i < w.cols.size(); ++i) {
        const Column& c = w.cols[i];
        const double x = static_cast<double>(i);
        auto strand_gap = [&](int count, double x0, double x1) {
            for (int j = 1; j <= count; ++j) {
                s.line(x0, level_z(j, true), x1, level_z(j, true), stroke);
                s.line(x0, level_z(j, false), x1, level_z(j, false), stroke);
            }
        };
        strand_gap(k, x - 0.5, x - 0.15);
        auto cross_at = [&](double zhi, double zlo) {
            // over-strand descends left-to-right
            s.line(x - 0.15, zlo, x + 0.15, zhi, stroke);
            s.line(x - 0.15, zhi, x + 0.15, zlo, halo);
            s.line(x - 0.15, zhi, x + 0.15, zlo, stroke);
        };
        int d = col_delta(c);
        // spectators slanting past the event
        int from = col_need(c) + 1;
        for (int j = from; j <= k; ++j) {
            s.line(x - 0.15, level_z(j, true), x + 0.15, level_z(j + d, true), stroke);
            s.line(x - 0.15, level_z(j, false), x + 0.15, level_z(j + d, false), stroke);
        }
        switch (c.kind) {
            case ColKind::AxisCuspL: s.tip(x - 0.3, 0, x + 0.15, 0.5, -0.5, stroke); break;
            case ColKind::AxisCuspR: s.tip(x + 0.3, 0, x - 0.15, 0.5, -0.5, stroke); break;
            case ColKind::AxisCross: cross_at(0.5, -0.5); break;
            case ColKind::PairCuspL:
                s.tip(x - 0.3, c.level, x + 0.15, c.level - 0.5, c.level + 0.5, stroke);
                s.tip(x - 0.3, -c.level, x + 0.15, -c.level + 0.5, -c.level - 0.5, stroke);
                break;
            case ColKind::PairCuspR:
                s.tip(x + 0.3, c.level, x - 0.15, c.level - 0.5, c.level + 0.5, stroke);
                s.tip(x + 0.3, -c.level, x - 0.15, -c.level + 0.5, -c.level - 0.5, stroke);
                break;
            case ColKind::PairCross:
                cross_at(c.level + 0.5, c.level - 0.5);
                // mirror: the over-strand below is the one descending in z
                s.line(x - 0.15, -(c.level + 0.5), x + 0.15, -(c.level - 0.5), stroke);
                s.line(x - 0.15, -(c.level - 0.5), x + 0.15, -(c.level + 0.5), halo);
                s.line(x - 0.15, -(c.level - 0.5), x + 0.15, -(c.level + 0.5), stroke);
                break;
        }
        k += d;
        strand_gap(k, x + 0.15, x + 0.5);
    }
    out << s.body.str() << "</svg>\n";
    return out.str();
}

}  // namespace

std::string render(const FrontWord& w, const RenderOptions& opt) {
    require_valid(w);
    if (opt.format == RenderOptions::Svg) return svg_front(w, opt);
    return ascii_front(w, opt, nullptr);
}

std::string render(const SmoothWord& d, const RenderOptions& opt) {
    require_valid(d);
    FrontWord skel = smooth_skeleton(d);
    if (opt.format == RenderOptions::Svg) return svg_front(skel, opt);
    return ascii_front(skel, opt, &d);
}

std::string render(const Grid& g, const RenderOptions& opt) {
    require_valid(g);
    if (opt.format == RenderOptions::Svg) {
        const double sc = opt.scale;
        std::ostringstream out;
        out << svg_header(sc * (g.n + 2), sc * (g.n + 2));
        for (int i = 0; i <= g.n; ++i) {
            out << "<line x1=\"" << sc << "\" y1=\"" << sc * (i + 1) << "\" x2=\"" << sc * (g.n + 1)
                << "\" y2=\"" << sc * (i + 1) << "\" stroke=\"#999\" stroke-width=\"0.5\"/>\n";
            out << "<line x1=\"" << sc * (i + 1) << "\" y1=\"" << sc << "\" x2=\"" << sc * (i + 1)
                << "\" y2=\"" << sc * (g.n + 1) << "\" stroke=\"#999\" stroke-width=\"0.5\"/>\n";
        }
        for (int r = 0; r < g.n; ++r) {
            out << "<text x=\"" << sc * (g.xs[r] + 1.5) << "\" y=\"" << sc * (r + 1.65)
                << "\" text-anchor=\"middle\" font-size=\"" << sc * 0.6 << "\">X</text>\n";
            out << "<text x=\"" << sc * (g.os[r] + 1.5) << "\" y=\"" << sc * (r + 1.65)
                << "\" text-anchor=\"middle\" font-size=\"" << sc * 0.6 << "\">O</text>\n";
        }
        out << "</svg>\n";
        return out.str();
    }
    std::string s;
    for (int r = 0; r < g.n; ++r) {
        for (int c = 0; c < g.n; ++c) {
            if (g.xs[r] == c)
                s += " X";
            else if (g.os[r] == c)
                s += " O";
            else
                s += " .";
        }
        s += "\n";
    }
    return s;
}

}  // namespace equifront
