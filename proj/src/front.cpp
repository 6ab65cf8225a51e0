#include "equifront/front.hpp"

#include <sstream>

#include "equifront/diagram.hpp"

namespace equifront {

Column make_col(ColKind k, int level) {
    Column c{k, level};
    if (c.is_axis()) c.level = 0;
    return c;
}

std::string col_token(const Column& c) {
    switch (c.kind) {
        case ColKind::AxisCuspL: return "AL";
        case ColKind::AxisCuspR: return "AR";
        case ColKind::AxisCross: return "AX";
        case ColKind::PairCuspL: return "PL " + std::to_string(c.level);
        case ColKind::PairCuspR: return "PR " + std::to_string(c.level);
        case ColKind::PairCross: return "PX " + std::to_string(c.level);
    }
    return "?";
}

std::optional<Column> col_from_token(const std::string& tok) {
    std::istringstream is(tok);
    std::string kind;
    if (!(is >> kind)) return std::nullopt;
    auto parse_level = [&](ColKind k) -> std::optional<Column> {
        int lvl;
        if (!(is >> lvl) || lvl < 1) return std::nullopt;
        std::string rest;
        if (is >> rest) return std::nullopt;
        return Column{k, lvl};
    };
    std::string rest;
    if (kind == "AL" || kind == "AR" || kind == "AX") {
        if (is >> rest) return std::nullopt;
        if (kind == "AL") return Column{ColKind::AxisCuspL, 0};
        if (kind == "AR") return Column{ColKind::AxisCuspR, 0};
        return Column{ColKind::AxisCross, 0};
    }
    if (kind == "PL") return parse_level(ColKind::PairCuspL);
    if (kind == "PR") return parse_level(ColKind::PairCuspR);
    if (kind == "PX") return parse_level(ColKind::PairCross);
    return std::nullopt;
}

int col_delta(const Column& c) {
    switch (c.kind) {
        case ColKind::AxisCuspL: return 1;
        case ColKind::AxisCuspR: return -1;
        case ColKind::PairCuspL: return 2;
        case ColKind::PairCuspR: return -2;
        default: return 0;
    }
}

int col_need(const Column& c) {
    switch (c.kind) {
        case ColKind::AxisCuspL: return 0;
        case ColKind::AxisCuspR: return 1;
        case ColKind::AxisCross: return 1;
        case ColKind::PairCuspL: return c.level - 1;   // level <= k + 1
        case ColKind::PairCuspR: return c.level + 1;   // merged strands exist
        case ColKind::PairCross: return c.level + 1;   // level + 1 <= k
    }
    return 0;
}

ValidationReport validate(const FrontWord& w) {
    ValidationReport r;
    int k = 0;
    for (size_t i = 0; i < w.cols.size(); ++i) {
        const Column& c = w.cols[i];
        if (!c.is_axis() && c.level < 1) {
            r.error = "column " + std::to_string(i) + ": level must be >= 1";
            return r;
        }
        if (k < col_need(c)) {
            r.error = "column " + std::to_string(i) + " (" + col_token(c) +
                      "): needs " + std::to_string(col_need(c)) +
                      " strands above the axis, have " + std::to_string(k);
            return r;
        }
        k += col_delta(c);
    }
    r.levels_ok = true;
    if (k != 0) {
        r.error = "open front: " + std::to_string(k) + " strands above the axis at the end";
        return r;
    }
    r.closed = true;
    if (w.anchor) {
        if (*w.anchor < 0 || *w.anchor >= static_cast<int>(w.cols.size()) ||
            !w.cols[*w.anchor].is_axis_cusp()) {
            r.error = "anchor does not designate an on-axis cusp";
            return r;
        }
    }

    fill_axis_profile(w, r);
    if (!r.error.empty()) return r;
    for (size_t i = 0; i < r.axis_cusps_per_component.size(); ++i) {
        if (r.axis_cusps_per_component[i] != 2) {
            r.error = "component " + std::to_string(i) + " traverses " +
                      std::to_string(r.axis_cusps_per_component[i]) +
                      " on-axis cusps (want exactly 2)";
            return r;
        }
        if (r.axis_cross_passages_per_component[i] % 2 != 0) {
            r.error = "component " + std::to_string(i) + " has odd axis-crossing parity";
            return r;
        }
    }
    r.valid = true;
    return r;
}

void require_valid(const FrontWord& w) {
    auto r = validate(w);
    if (!r.valid) throw InvalidWord(r.error);
}

std::vector<Column> mirror_flip_cols(const std::vector<Column>& cols) {
    std::vector<Column> out;
    out.reserve(cols.size());
    for (auto it = cols.rbegin(); it != cols.rend(); ++it) {
        Column c = *it;
        switch (c.kind) {
            case ColKind::AxisCuspL: c.kind = ColKind::AxisCuspR; break;
            case ColKind::AxisCuspR: c.kind = ColKind::AxisCuspL; break;
            case ColKind::PairCuspL: c.kind = ColKind::PairCuspR; break;
            case ColKind::PairCuspR: c.kind = ColKind::PairCuspL; break;
            default: break;
        }
        out.push_back(c);
    }
    return out;
}

FrontWord mirror_flip(const FrontWord& w) {
    require_valid(w);
    FrontWord out;
    out.cols = mirror_flip_cols(w.cols);
    if (w.anchor) out.anchor = static_cast<int>(w.cols.size()) - 1 - *w.anchor;
    return out;
}

std::string emit_front(const FrontWord& w) {
    std::ostringstream os;
    os << "frontword v1 " << w.cols.size() << "\n";
    for (auto& c : w.cols) os << col_token(c) << "\n";
    if (w.anchor) os << "# anchor " << *w.anchor << "\n";
    return os.str();
}

FrontWord parse_front(const std::string& text) {
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
    if (!(hs >> magic >> ver >> n) || magic != "frontword" || ver != "v1")
        throw ParseError("expected header 'frontword v1 <n>'", line_no);
    FrontWord w;
    for (size_t i = 0; i < n; ++i) {
        if (!next_line()) throw ParseError("truncated file: expected column " + std::to_string(i), line_no + 1);
        auto c = col_from_token(line);
        if (!c) throw ParseError("unknown token '" + line + "'", line_no);
        w.cols.push_back(*c);
    }
    while (next_line()) {
        std::istringstream ts(line);
        std::string hash, word;
        int idx;
        if ((ts >> hash >> word >> idx) && hash == "#" && word == "anchor") {
            w.anchor = idx;
            continue;
        }
        throw ParseError("unexpected trailing line '" + line + "'", line_no);
    }
    return w;
}

std::string emit_plain(const PlainWord& w) {
    std::ostringstream os;
    os << "plainword v1 " << w.cols.size() << "\n";
    for (auto& c : w.cols) {
        switch (c.kind) {
            case PlainKind::CuspL: os << "L " << c.pos << "\n"; break;
            case PlainKind::CuspR: os << "R " << c.pos << "\n"; break;
            case PlainKind::Cross: os << "X " << c.pos << "\n"; break;
        }
    }
    return os.str();
}

PlainWord parse_plain(const std::string& text) {
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
    if (!(hs >> magic >> ver >> n) || magic != "plainword" || ver != "v1")
        throw ParseError("expected header 'plainword v1 <n>'", line_no);
    PlainWord w;
    for (size_t i = 0; i < n; ++i) {
        if (!next_line()) throw ParseError("truncated file", line_no + 1);
        std::istringstream ts(line);
        std::string kind;
        int pos;
        if (!(ts >> kind >> pos) || pos < 1) throw ParseError("unknown token '" + line + "'", line_no);
        PlainKind k;
        if (kind == "L")
            k = PlainKind::CuspL;
        else if (kind == "R")
            k = PlainKind::CuspR;
        else if (kind == "X")
            k = PlainKind::Cross;
        else
            throw ParseError("unknown token '" + line + "'", line_no);
        w.cols.push_back({k, pos});
    }
    return w;
}

PlainWord unfold(const FrontWord& w, std::vector<std::vector<int>>* plain_cols_of_front_col) {
    PlainWord out;
    if (plain_cols_of_front_col) plain_cols_of_front_col->assign(w.cols.size(), {});
    int k = 0;  // above-axis strand count
    for (size_t i = 0; i < w.cols.size(); ++i) {
        const Column& c = w.cols[i];
        auto emit = [&](PlainKind pk, int pos) {
            if (plain_cols_of_front_col)
                (*plain_cols_of_front_col)[i].push_back(static_cast<int>(out.cols.size()));
            out.cols.push_back({pk, pos});
        };
        const int j = c.level;
        switch (c.kind) {
            case ColKind::AxisCuspL: emit(PlainKind::CuspL, k + 1); break;
            case ColKind::AxisCuspR: emit(PlainKind::CuspR, k); break;
            case ColKind::AxisCross: emit(PlainKind::Cross, k); break;
            case ColKind::PairCuspL:
                emit(PlainKind::CuspL, k - j + 2);    // below half
                emit(PlainKind::CuspL, (k + 2) + j);  // above half
                break;
            case ColKind::PairCuspR:
                emit(PlainKind::CuspR, k - j);        // below half
                emit(PlainKind::CuspR, (k - 2) + j);  // above half
                break;
            case ColKind::PairCross:
                emit(PlainKind::Cross, k - j);  // below half
                emit(PlainKind::Cross, k + j);  // above half
                break;
        }
        k += col_delta(c);
    }
    return out;
}

}  // namespace equifront
