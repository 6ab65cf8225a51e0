#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace equifront {

// One symmetric event column of a transvergent front.
// Off-axis events are stored once and act on both half-planes; levels are
// 1-based distances from the axis (1 = innermost).
enum class ColKind : uint8_t {
    AxisCuspL,  // AL: on-axis left cusp, strand pair creation
    AxisCuspR,  // AR: on-axis right cusp, strand pair annihilation
    AxisCross,  // AX: the two innermost strands cross at the axis
    PairCuspL,  // PL k: mirrored left cusps at level k
    PairCuspR,  // PR k: mirrored right cusps at level k
    PairCross,  // PX k: mirrored crossings of levels (k, k+1)
};

struct Column {
    ColKind kind;
    int level = 0;  // 0 for axis kinds

    bool operator==(const Column&) const = default;
    bool is_axis() const {
        return kind == ColKind::AxisCuspL || kind == ColKind::AxisCuspR ||
               kind == ColKind::AxisCross;
    }
    bool is_axis_cusp() const {
        return kind == ColKind::AxisCuspL || kind == ColKind::AxisCuspR;
    }
    bool is_cusp() const {
        return is_axis_cusp() || kind == ColKind::PairCuspL || kind == ColKind::PairCuspR;
    }
    bool is_crossing() const {
        return kind == ColKind::AxisCross || kind == ColKind::PairCross;
    }
};

Column make_col(ColKind k, int level = 0);
std::string col_token(const Column& c);
std::optional<Column> col_from_token(const std::string& tok);

// Above-axis strand count change of one column.
int col_delta(const Column& c);
// Minimal above-axis strand count required before the column.
int col_need(const Column& c);

struct FrontWord {
    std::vector<Column> cols;
    std::optional<int> anchor;  // marked on-axis cusp, by column index

    bool operator==(const FrontWord& o) const { return cols == o.cols && anchor == o.anchor; }
    bool same_cols(const FrontWord& o) const { return cols == o.cols; }
    size_t size() const { return cols.size(); }
};

struct ValidationReport {
    bool valid = false;
    bool closed = false;
    bool levels_ok = false;
    int component_count = 0;
    std::vector<int> axis_cusps_per_component;
    std::vector<int> axis_cross_passages_per_component;
    std::string error;  // first structural problem, empty if valid
};

class InvalidWord : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class NoSuchCusp : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line) : std::runtime_error(what), line_no(line) {}
    int line_no;
};

ValidationReport validate(const FrontWord& w);
void require_valid(const FrontWord& w);

// pi-rotation of the page: reverses column order and swaps L/R cusp kinds.
FrontWord mirror_flip(const FrontWord& w);
std::vector<Column> mirror_flip_cols(const std::vector<Column>& cols);

// Text format, bit-exact:
//   frontword v1 <n-columns>\n
//   one column token per line (AL, AR, AX, PL k, PR k, PX k)
//   optional trailer: "# anchor <column-index>"
std::string emit_front(const FrontWord& w);
FrontWord parse_front(const std::string& text);

// Non-equivariant front word over a single strand stack (used for grid
// conversions and plain catalog diagrams). Positions are 1-based from the
// bottom of the stack.
enum class PlainKind : uint8_t { CuspL, CuspR, Cross };
struct PlainCol {
    PlainKind kind;
    int pos;
    bool operator==(const PlainCol&) const = default;
};
struct PlainWord {
    std::vector<PlainCol> cols;
};

std::string emit_plain(const PlainWord& w);
PlainWord parse_plain(const std::string& text);

// Unfold a transvergent word into the full two-sided plain word.
// plain_col_of_front_col[i] lists the plain column indices produced by front
// column i (1 for axis events, 2 for pair events, below half first).
PlainWord unfold(const FrontWord& w, std::vector<std::vector<int>>* plain_cols_of_front_col = nullptr);

}  // namespace equifront
