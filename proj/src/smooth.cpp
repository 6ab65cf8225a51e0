#include "equifront/smooth.hpp"

#include <sstream>

#include "equifront/diagram.hpp"
#include "equifront/invariants.hpp"

namespace equifront {

FrontWord smooth_skeleton(const SmoothWord& d) {
    FrontWord w;
    for (auto& c : d.cols) {
        switch (c.kind) {
            case SmoothKind::AxisVTL: w.cols.push_back({ColKind::AxisCuspL, 0}); break;
            case SmoothKind::AxisVTR: w.cols.push_back({ColKind::AxisCuspR, 0}); break;
            case SmoothKind::AxisCross: w.cols.push_back({ColKind::AxisCross, 0}); break;
            case SmoothKind::PairVTL: w.cols.push_back({ColKind::PairCuspL, c.level}); break;
            case SmoothKind::PairVTR: w.cols.push_back({ColKind::PairCuspR, c.level}); break;
            case SmoothKind::PairCross: w.cols.push_back({ColKind::PairCross, c.level}); break;
        }
    }
    return w;
}

ValidationReport validate(const SmoothWord& d) { return validate(smooth_skeleton(d)); }

void require_valid(const SmoothWord& d) {
    auto r = validate(d);
    if (!r.valid) throw InvalidDiagram(r.error);
}

std::string emit_smooth(const SmoothWord& d) {
    std::ostringstream os;
    os << "smoothword v1 " << d.cols.size() << "\n";
    for (auto& c : d.cols) {
        switch (c.kind) {
            case SmoothKind::AxisVTL: os << "VTL"; break;
            case SmoothKind::AxisVTR: os << "VTR"; break;
            case SmoothKind::AxisCross: os << "AX " << (c.asc_over ? "o" : "u"); break;
            case SmoothKind::PairVTL: os << "PVTL " << c.level; break;
            case SmoothKind::PairVTR: os << "PVTR " << c.level; break;
            case SmoothKind::PairCross:
                os << "PX " << c.level << " " << (c.asc_over ? "o" : "u");
                break;
        }
        os << "\n";
    }
    return os.str();
}

SmoothWord parse_smooth(const std::string& text) {
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
    size_t n = 0;
    if (!(hs >> magic >> ver >> n) || magic != "smoothword" || ver != "v1")
        throw ParseError("expected header 'smoothword v1 <n>'", line_no);
    SmoothWord d;
    auto flag = [&](const std::string& f) {
        if (f == "o") return true;
        if (f == "u") return false;
        throw ParseError("expected o or u, got '" + f + "'", line_no);
    };
    for (size_t i = 0; i < n; ++i) {
        if (!next_line()) throw ParseError("truncated file", line_no + 1);
        std::istringstream ts(line);
        std::string kind, f;
        int lvl;
        ts >> kind;
        if (kind == "VTL")
            d.cols.push_back({SmoothKind::AxisVTL, 0, false});
        else if (kind == "VTR")
            d.cols.push_back({SmoothKind::AxisVTR, 0, false});
        else if (kind == "AX" && (ts >> f))
            d.cols.push_back({SmoothKind::AxisCross, 0, flag(f)});
        else if (kind == "PVTL" && (ts >> lvl) && lvl >= 1)
            d.cols.push_back({SmoothKind::PairVTL, lvl, false});
        else if (kind == "PVTR" && (ts >> lvl) && lvl >= 1)
            d.cols.push_back({SmoothKind::PairVTR, lvl, false});
        else if (kind == "PX" && (ts >> lvl >> f) && lvl >= 1)
            d.cols.push_back({SmoothKind::PairCross, lvl, flag(f)});
        else
            throw ParseError("unknown token '" + line + "'", line_no);
    }
    return d;
}

int smooth_bad_axis_count(const SmoothWord& d) {
    int n = 0;
    for (auto& c : d.cols) n += c.kind == SmoothKind::AxisCross && c.asc_over;
    return n;
}

int smooth_bad_pair_count(const SmoothWord& d) {
    int n = 0;
    for (auto& c : d.cols) n += c.kind == SmoothKind::PairCross && c.asc_over;
    return n;
}

FrontWord legendrianize(const SmoothWord& d, const std::vector<bool>& axis_choice,
                        const std::vector<bool>& offaxis_choice) {
    require_valid(d);
    FrontWord w;
    size_t ai = 0, pi = 0;
    for (auto& c : d.cols) {
        switch (c.kind) {
            case SmoothKind::AxisVTL: w.cols.push_back({ColKind::AxisCuspL, 0}); break;
            case SmoothKind::AxisVTR: w.cols.push_back({ColKind::AxisCuspR, 0}); break;
            case SmoothKind::PairVTL: w.cols.push_back({ColKind::PairCuspL, c.level}); break;
            case SmoothKind::PairVTR: w.cols.push_back({ColKind::PairCuspR, c.level}); break;
            case SmoothKind::AxisCross: {
                if (!c.asc_over) {
                    w.cols.push_back({ColKind::AxisCross, 0});
                    break;
                }
                bool second = ai < axis_choice.size() && axis_choice[ai];
                ++ai;
                if (!second)
                    w.cols.insert(w.cols.end(), {{ColKind::PairCuspL, 1},
                                                 {ColKind::AxisCross, 0},
                                                 {ColKind::PairCross, 1},
                                                 {ColKind::PairCuspR, 2}});
                else
                    w.cols.insert(w.cols.end(), {{ColKind::PairCuspL, 2},
                                                 {ColKind::PairCross, 1},
                                                 {ColKind::AxisCross, 0},
                                                 {ColKind::PairCuspR, 1}});
                break;
            }
            case SmoothKind::PairCross: {
                if (!c.asc_over) {
                    w.cols.push_back({ColKind::PairCross, c.level});
                    break;
                }
                bool second = pi < offaxis_choice.size() && offaxis_choice[pi];
                ++pi;
                const int l = c.level;
                if (!second)
                    w.cols.insert(w.cols.end(), {{ColKind::PairCuspL, l + 2},
                                                 {ColKind::PairCross, l + 1},
                                                 {ColKind::PairCuspR, l}});
                else
                    w.cols.insert(w.cols.end(), {{ColKind::PairCuspL, l},
                                                 {ColKind::PairCross, l + 1},
                                                 {ColKind::PairCuspR, l + 2}});
                break;
            }
        }
    }
    require_valid(w);
    return w;
}

SmoothWord forget_legendrian(const FrontWord& w) {
    require_valid(w);
    SmoothWord d;
    for (auto& c : w.cols) {
        switch (c.kind) {
            case ColKind::AxisCuspL: d.cols.push_back({SmoothKind::AxisVTL, 0, false}); break;
            case ColKind::AxisCuspR: d.cols.push_back({SmoothKind::AxisVTR, 0, false}); break;
            case ColKind::AxisCross: d.cols.push_back({SmoothKind::AxisCross, 0, false}); break;
            case ColKind::PairCuspL: d.cols.push_back({SmoothKind::PairVTL, c.level, false}); break;
            case ColKind::PairCuspR: d.cols.push_back({SmoothKind::PairVTR, c.level, false}); break;
            case ColKind::PairCross: d.cols.push_back({SmoothKind::PairCross, c.level, false}); break;
        }
    }
    return d;
}

Laurent smooth_jones_in_A(const SmoothWord& d, int crossing_bound) {
    require_valid(d);
    // unfold the skeleton; collect per-plain-crossing over bits in sweep order
    FrontWord skel = smooth_skeleton(d);
    std::vector<std::vector<int>> plain_cols;
    PlainWord pw = unfold(skel, &plain_cols);
    std::vector<bool> asc_over;
    {
        std::vector<std::pair<int, bool>> by_plain;
        for (size_t i = 0; i < d.cols.size(); ++i)
            if (d.cols[i].is_crossing())
                for (int pc : plain_cols[i]) by_plain.push_back({pc, d.cols[i].asc_over});
        std::sort(by_plain.begin(), by_plain.end());
        for (auto& [pc, b] : by_plain) asc_over.push_back(b);
    }
    return jones_in_A_plain_bits(pw, asc_over, crossing_bound);
}

}  // namespace equifront
