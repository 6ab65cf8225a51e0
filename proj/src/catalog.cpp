#include "equifront/catalog.hpp"

#include <sstream>

namespace equifront {

namespace {
Column AL() { return {ColKind::AxisCuspL, 0}; }
Column AR() { return {ColKind::AxisCuspR, 0}; }
Column AX() { return {ColKind::AxisCross, 0}; }
Column PL(int k) { return {ColKind::PairCuspL, k}; }
Column PR(int k) { return {ColKind::PairCuspR, k}; }
Column PX(int k) { return {ColKind::PairCross, k}; }
}  // namespace

FrontWord cat_unknot() {
    FrontWord w;
    w.cols = {AL(), AR()};
    return w;
}

FrontWord cat_u_s() {
    FrontWord w;
    w.cols = {AL(), AL(), PR(1)};
    w.anchor = 1;  // descendant of the stabilized right cusp
    return w;
}

FrontWord cat_u_t() {
    FrontWord w;
    w.cols = {AL(), AX(), AR()};
    w.anchor = 2;
    return w;
}

FrontWord cat_torus(int n) {
    if (n < -8 || n > 8) throw UnsupportedParameter("torus parameter out of range");
    FrontWord w;
    if (n >= 0) {
        // twist box of n half twists between the nested strands, then the clasp
        w.cols = {AL(), AL()};
        for (int i = 0; i < n; ++i) w.cols.push_back(PX(1));
        w.cols.push_back(PX(1));
        w.cols.push_back(AX());
        w.cols.push_back(PR(1));
    } else {
        // mirrored clasp stack threaded through the axis
        w.cols = {AL()};
        for (int i = 0; i < -n; ++i) {
            w.cols.push_back(PL(1));
            w.cols.push_back(PX(2));
        }
        w.cols.push_back(AX());
        for (int i = 0; i < -n; ++i) w.cols.push_back(PR(2));
        w.cols.push_back(AR());
    }
    return w;
}

int torus_expected_tb(int n) { return n >= 0 ? 2 * n - 1 : 4 * n - 2; }

FrontWord cat_twist(int m) {
    if (m == -1) throw UnsupportedParameter("twist(-1) is the unknot; use unknot()");
    if (m < -8 || m > 8) throw UnsupportedParameter("twist parameter out of range");
    FrontWord w;
    if (m >= 0) {
        // axis twist box, then the clasp around it
        w.cols = {PL(1)};
        for (int i = 0; i < m; ++i) w.cols.push_back(AX());
        w.cols.push_back(AL());
        w.cols.push_back(PX(1));
        w.cols.push_back(AR());
        w.cols.push_back(PR(1));
    } else if (m % 2 == 0) {
        int half = (-m) / 2;
        w.cols = {AL(), PL(1)};
        for (int i = 0; i < half; ++i) w.cols.push_back(PX(2));
        w.cols.push_back(AX());
        w.cols.push_back(AX());
        w.cols.push_back(PR(2));
        w.cols.push_back(AR());
    } else {
        int half = (-m - 1) / 2;
        w.cols = {PL(1), AX(), AX(), AL(), PX(1)};
        for (int i = 0; i < half; ++i) w.cols.push_back(PX(2));
        w.cols.push_back(AR());
        w.cols.push_back(PR(1));
    }
    return w;
}

int twist_expected_tb(int m) {
    if (m >= 0) return m % 2 == 0 ? -m - 1 : -m - 5;
    if (m == -1) return -1;
    return m % 2 == 0 ? 1 : -3;
}

Grid cat_m9_44_grid() {
    // vertical segments per column, transcribed from the atlas table entry;
    // heights are bottom-up in the source picture, rows here are top-down.
    const int n = 9;
    const int start[n] = {4, 7, 8, 2, 0, 6, 1, 5, 3};
    const int end_[n] = {8, 1, 6, 7, 5, 3, 4, 2, 0};
    Grid g;
    g.n = n;
    g.xs.assign(n, -1);
    g.os.assign(n, -1);
    for (int c = 0; c < n; ++c) {
        int rx = n - 1 - start[c];
        int ro = n - 1 - end_[c];
        g.xs[rx] = c;
        g.os[ro] = c;
    }
    return g;
}

FrontWord cat_k2_front() {
    FrontWord w;
    w.cols = {AL(), PL(1), PX(2), AX(),  PX(1), PX(2), AX(),
              PX(1), PX(1), AX(), PX(2), AX(),  PR(1), AR()};
    return w;
}

PlainWord cat_k1_front() {
    // placeholder until the transcription lands; replaced below
    return unfold(cat_k2_front());
}

std::vector<CatalogEntry> catalog_entries() {
    std::vector<CatalogEntry> out;
    auto add_front = [&](const std::string& name, const std::string& params, FrontWord f, int tb,
                         const std::string& prov) {
        CatalogEntry e;
        e.name = name;
        e.params = params;
        e.front = std::move(f);
        e.expected_tb = tb;
        e.provenance = prov;
        out.push_back(std::move(e));
    };
    add_front("unknot", "", cat_unknot(), -1, "minimal transvergent unknot");
    add_front("u_s", "", cat_u_s(), -2, "S-stabilized unknot at the right cusp");
    add_front("u_t", "", cat_u_t(), -2, "T-stabilized unknot at the right cusp");
    for (int n = -3; n <= 3; ++n)
        add_front("torus", "n=" + std::to_string(n), cat_torus(n), torus_expected_tb(n),
                  "two-strand torus representative");
    for (int m = -5; m <= 5; ++m) {
        if (m == -1 || m == 0) continue;
        add_front("twist", "m=" + std::to_string(m), cat_twist(m), twist_expected_tb(m),
                  "twist-knot representative");
    }
    {
        CatalogEntry e;
        e.name = "m9_44_grid";
        e.is_grid = true;
        e.grid = cat_m9_44_grid();
        e.expected_tb = -3;
        e.provenance = "atlas grid of m(9_44)";
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "k2";
        e.front = cat_k2_front();
        e.expected_tb = -3;
        e.provenance = "transvergent representative of m(9_44)";
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "k1";
        e.is_plain = true;
        e.plain = cat_k1_front();
        e.expected_tb = -3;
        e.provenance = "plain maximal representative of m(9_44)";
        out.push_back(std::move(e));
    }
    return out;
}

CatalogEntry catalog_emit(const std::string& name, const std::string& params) {
    for (auto& e : catalog_entries())
        if (e.name == name && (params.empty() || e.params == params)) return e;
    throw UnsupportedParameter("no catalog entry " + name +
                               (params.empty() ? "" : " with " + params));
}

}  // namespace equifront
