#include "equifront/moves.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "equifront/invariants.hpp"

namespace equifront {

namespace {

struct Footprint {
    int pos;     // lowest level touched (1 for axis events)
    int before;  // strands consumed
    int after;   // strands produced
};

Footprint footprint(const Column& c) {
    switch (c.kind) {
        case ColKind::AxisCuspL: return {1, 0, 1};
        case ColKind::AxisCuspR: return {1, 1, 0};
        case ColKind::AxisCross: return {1, 1, 1};
        case ColKind::PairCuspL: return {c.level, 0, 2};
        case ColKind::PairCuspR: return {c.level, 2, 0};
        case ColKind::PairCross: return {c.level, 2, 2};
    }
    return {1, 0, 0};
}

std::optional<Column> reposition(const Column& c, int new_pos) {
    if (c.is_axis()) return new_pos == 1 ? std::optional<Column>(c) : std::nullopt;
    if (new_pos < 1) return std::nullopt;
    Column out = c;
    out.level = new_pos;
    return out;
}

int kind_rank(ColKind k) {
    switch (k) {
        case ColKind::AxisCuspL: return 0;
        case ColKind::AxisCuspR: return 1;
        case ColKind::AxisCross: return 2;
        case ColKind::PairCuspL: return 3;
        case ColKind::PairCuspR: return 4;
        case ColKind::PairCross: return 5;
    }
    return 6;
}

std::pair<int, int> sort_key(const Column& c) { return {kind_rank(c.kind), c.level}; }

}  // namespace

std::optional<std::pair<Column, Column>> try_swap(const Column& a, const Column& b) {
    Footprint fa = footprint(a), fb = footprint(b);
    // b entirely above a's output footprint: b drops by a's strand delta
    if (fb.pos >= fa.pos + fa.after) {
        auto nb = reposition(b, fb.pos - (fa.after - fa.before));
        if (nb && footprint(*nb).pos >= fa.pos + fa.before) return std::make_pair(*nb, a);
        return std::nullopt;
    }
    // b entirely below a's footprint: a rises by b's strand delta
    if (fb.pos + fb.before <= fa.pos) {
        auto na = reposition(a, fa.pos + (fb.after - fb.before));
        if (na && fb.pos + fb.after <= footprint(*na).pos) return std::make_pair(b, *na);
        return std::nullopt;
    }
    return std::nullopt;
}

FrontWord canonical_form(const FrontWord& w) {
    require_valid(w);
    FrontWord out = w;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < out.cols.size(); ++i) {
            auto sw = try_swap(out.cols[i], out.cols[i + 1]);
            if (!sw) continue;
            if (sort_key(sw->first) < sort_key(out.cols[i])) {
                if (out.anchor) {
                    if (*out.anchor == static_cast<int>(i))
                        out.anchor = static_cast<int>(i) + 1;
                    else if (*out.anchor == static_cast<int>(i) + 1)
                        out.anchor = static_cast<int>(i);
                }
                out.cols[i] = sw->first;
                out.cols[i + 1] = sw->second;
                changed = true;
            }
        }
    }
    return out;
}

bool canonically_equal(const FrontWord& a, const FrontWord& b) {
    return canonical_form(a).cols == canonical_form(b).cols;
}

namespace {

// interface requirement of a fragment: strands needed at entry and the delta
std::pair<int, int> fragment_interface(const std::vector<Column>& cols) {
    int d = 0, need = 0;
    for (auto& c : cols) {
        need = std::max(need, col_need(c) - d);
        d += col_delta(c);
    }
    return {need, d};
}

bool fragment_is_floating(const std::vector<Column>& cols) {
    for (auto& c : cols)
        if (c.is_axis()) return false;
    return true;
}

std::vector<Column> shifted(const std::vector<Column>& cols, int offset) {
    std::vector<Column> out = cols;
    for (auto& c : out)
        if (!c.is_axis()) c.level += offset;
    return out;
}

std::vector<int> axis_cusp_positions(const std::vector<Column>& cols) {
    std::vector<int> out;
    for (size_t i = 0; i < cols.size(); ++i)
        if (cols[i].is_axis_cusp()) out.push_back(static_cast<int>(i));
    return out;
}

// Matching: consume the pattern in order starting at `at`; a foreign column
// must commute out rightward past the remaining pattern or leftward past the
// consumed part. Returns the consumed span and the displaced foreigners.
struct MatchResult {
    int span = 0;
    std::vector<Column> left_out;   // foreigners pushed before the site
    std::vector<Column> right_out;  // foreigners pushed after the site
};

std::optional<MatchResult> match_at(const std::vector<Column>& word, int at,
                                    const std::vector<Column>& pattern, int slack) {
    if (pattern.empty()) return MatchResult{};
    if (at + static_cast<int>(pattern.size()) > static_cast<int>(word.size())) return std::nullopt;
    MatchResult res;
    size_t pi = 0;
    int j = at;
    int foreigners = 0;
    while (pi < pattern.size()) {
        if (j >= static_cast<int>(word.size())) return std::nullopt;
        Column c = word[j];
        if (c == pattern[pi]) {
            ++pi;
            ++j;
            continue;
        }
        if (++foreigners > slack) return std::nullopt;
        // push right past the remaining pattern
        {
            Column cur = c;
            bool ok = true;
            for (size_t t = pi; t < pattern.size() && ok; ++t) {
                auto sw = try_swap(cur, pattern[t]);
                if (sw && sw->first == pattern[t])
                    cur = sw->second;
                else
                    ok = false;
            }
            if (ok) {
                res.right_out.push_back(cur);
                ++j;
                continue;
            }
        }
        // push left past the consumed pattern prefix
        {
            Column cur = c;
            bool ok = true;
            for (size_t t = pi; t-- > 0 && ok;) {
                auto sw = try_swap(pattern[t], cur);
                if (sw && sw->second == pattern[t])
                    cur = sw->first;
                else
                    ok = false;
            }
            if (ok) {
                res.left_out.push_back(cur);
                ++j;
                continue;
            }
        }
        return std::nullopt;
    }
    res.span = j - at;
    return res;
}

}  // namespace

const MoveRule* MoveTable::find(const std::string& name) const {
    for (auto& r : rules)
        if (r.name == name) return &r;
    return nullptr;
}

std::string default_rule_text() {
    return R"(# Equivariant front move rules. Pair columns act on both half-planes;
# pi-rotations are generated automatically.
rule LR1a
lhs
rhs
PL 1
PX 2
PR 1
end
rule LR1b
lhs
rhs
PL 2
PX 1
PR 2
end
rule LR2mL
lhs
PL 2
PX 1
rhs
PL 1
PX 2
end
rule LR2tR1
lhs
PR 2
rhs
PX 1
PX 2
PR 1
end
rule LR2tR2
lhs
PR 1
rhs
PX 2
PX 1
PR 2
end
rule LR3
lhs
PX 1
PX 2
PX 1
rhs
PX 2
PX 1
PX 2
end
rule CX
lhs
AR
AX
axiscusps 0
rhs
PX 1
AX
PX 1
AR
axiscusps 3
end
rule XX
lhs
AX
PX 1
AX
PX 1
rhs
PX 1
AX
PX 1
AX
end
rule CC
lhs
PR 1
rhs
AX
PX 1
AX
PR 1
end
rule CR
lhs
AL
axiscusps 0
rhs
PL 1
AX
PX 1
AR
axiscusps 3
end
)";
}

namespace {

void finalize_rule(MoveRule& r) {
    auto [ln, ld] = fragment_interface(r.lhs);
    auto [rn, rd] = fragment_interface(r.rhs);
    if (ld != rd)
        throw RuleValidationFailure("rule " + r.name + ": sides change strand counts differently");
    r.entry_k = std::max(ln, rn);
    r.exit_k = r.entry_k + ld;
    r.floating = fragment_is_floating(r.lhs) && fragment_is_floating(r.rhs);
    if (r.lhs_axis_cusps.empty()) r.lhs_axis_cusps = axis_cusp_positions(r.lhs);
    if (r.rhs_axis_cusps.empty()) r.rhs_axis_cusps = axis_cusp_positions(r.rhs);
    if (r.lhs_axis_cusps.size() != r.rhs_axis_cusps.size())
        throw RuleValidationFailure("rule " + r.name + ": axis cusp counts differ between sides");

    // closure check: cap the fragment with nested axis cusps and compare
    // every front invariant on both sides
    auto closure = [&](const std::vector<Column>& frag) {
        FrontWord w;
        for (int i = 0; i < r.entry_k; ++i) w.cols.push_back({ColKind::AxisCuspL, 0});
        w.cols.insert(w.cols.end(), frag.begin(), frag.end());
        for (int i = 0; i < r.exit_k; ++i) w.cols.push_back({ColKind::AxisCuspR, 0});
        return w;
    };
    FrontWord cl = closure(r.lhs), cr = closure(r.rhs);
    auto repl = validate(cl);
    auto repr = validate(cr);
    if (!repl.valid || !repr.valid)
        throw RuleValidationFailure("rule " + r.name + ": closure invalid: " +
                                    (repl.valid ? repr.error : repl.error));
    if (repl.component_count != repr.component_count)
        throw RuleValidationFailure("rule " + r.name + ": closure component counts differ");
    InvariantRecord il = invariants(cl), ir = invariants(cr);
    if (repl.component_count == 1 && il.tb != ir.tb)
        throw RuleValidationFailure("rule " + r.name + ": closure tb differs (" +
                                    std::to_string(il.tb) + " vs " + std::to_string(ir.tb) + ")");
    if (kauffman_bracket(cl) != kauffman_bracket(cr))
        throw RuleValidationFailure("rule " + r.name + ": closure brackets differ");
    // anchored rotations must agree cusp-by-cusp: boundary cusps correspond
    // identically, fragment cusps positionally
    auto anchored_profile = [&](const FrontWord& w, const std::vector<Column>& frag,
                                const std::vector<int>& frag_cusps) {
        std::vector<int> vals;
        int off = r.entry_k;
        for (int i = 0; i < r.entry_k; ++i) vals.push_back(anchored_rotation(w, i));
        for (int ci : frag_cusps) vals.push_back(anchored_rotation(w, off + ci));
        for (int i = 0; i < r.exit_k; ++i)
            vals.push_back(anchored_rotation(w, off + static_cast<int>(frag.size()) + i));
        return vals;
    };
    if (anchored_profile(cl, r.lhs, r.lhs_axis_cusps) != anchored_profile(cr, r.rhs, r.rhs_axis_cusps))
        throw RuleValidationFailure("rule " + r.name + ": anchored rotations differ across sides");
}

MoveRule rotated_rule(const MoveRule& base) {
    MoveRule r;
    r.name = base.name + "r";
    r.rotated = true;
    r.lhs = mirror_flip_cols(base.lhs);
    r.rhs = mirror_flip_cols(base.rhs);
    for (int i : base.lhs_axis_cusps)
        r.lhs_axis_cusps.push_back(static_cast<int>(base.lhs.size()) - 1 - i);
    for (int i : base.rhs_axis_cusps)
        r.rhs_axis_cusps.push_back(static_cast<int>(base.rhs.size()) - 1 - i);
    std::sort(r.lhs_axis_cusps.begin(), r.lhs_axis_cusps.end());
    std::sort(r.rhs_axis_cusps.begin(), r.rhs_axis_cusps.end());
    return r;
}

bool same_unordered_sides(const MoveRule& a, const MoveRule& b) {
    return (a.lhs == b.lhs && a.rhs == b.rhs) || (a.lhs == b.rhs && a.rhs == b.lhs);
}

}  // namespace

MoveTable load_rule_table(const std::string& text) {
    MoveTable table;
    std::istringstream is(text);
    std::string line;
    MoveRule cur;
    bool in_rule = false, in_rhs = false;
    auto flush = [&]() {
        if (!in_rule) return;
        finalize_rule(cur);
        table.rules.push_back(cur);
        cur = MoveRule{};
        in_rule = in_rhs = false;
    };
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ts(line);
        std::string tok;
        ts >> tok;
        if (tok == "rule") {
            flush();
            in_rule = true;
            ts >> cur.name;
        } else if (tok == "lhs") {
            in_rhs = false;
        } else if (tok == "rhs") {
            in_rhs = true;
        } else if (tok == "end") {
            flush();
        } else if (tok == "axiscusps") {
            int i;
            while (ts >> i) (in_rhs ? cur.rhs_axis_cusps : cur.lhs_axis_cusps).push_back(i);
        } else {
            auto c = col_from_token(line);
            if (!c) throw RuleValidationFailure("bad rule column '" + line + "'");
            (in_rhs ? cur.rhs : cur.lhs).push_back(*c);
        }
    }
    flush();
    // close the table under pi-rotation
    size_t base_count = table.rules.size();
    for (size_t i = 0; i < base_count; ++i) {
        MoveRule rot = rotated_rule(table.rules[i]);
        bool dup = false;
        for (auto& r : table.rules) dup = dup || same_unordered_sides(rot, r);
        if (!dup) {
            finalize_rule(rot);
            table.rules.push_back(rot);
        }
    }
    return table;
}

const MoveTable& rule_table() {
    static MoveTable table = load_rule_table(default_rule_text());
    return table;
}

std::vector<MoveApplication> applicable_moves(const FrontWord& w, const MoveOptions& opt) {
    require_valid(w);
    std::vector<MoveApplication> out;
    const auto& table = rule_table();
    // strand count before each column, for offset enumeration of floating rules
    std::vector<int> kbefore(w.cols.size() + 1, 0);
    for (size_t i = 0; i < w.cols.size(); ++i)
        kbefore[i + 1] = kbefore[i] + col_delta(w.cols[i]);

    for (const auto& rule : table.rules) {
        for (bool forward : {true, false}) {
            const auto& pat = forward ? rule.lhs : rule.rhs;
            const auto& rep = forward ? rule.rhs : rule.lhs;
            const int growth = static_cast<int>(rep.size()) - static_cast<int>(pat.size());
            if (growth > opt.growth_budget) continue;
            const int max_off = rule.floating ? 64 : 0;
            if (pat.empty()) {
                // insertion sites: every gap, every level in range
                for (int at = 0; at <= static_cast<int>(w.cols.size()); ++at) {
                    auto [need, delta] = fragment_interface(rep);
                    (void)delta;
                    for (int off = 0; off <= (rule.floating ? kbefore[at] : 0); ++off) {
                        if (kbefore[at] < need + off) continue;
                        MoveApplication app{rule.name, forward, at, off, 0};
                        out.push_back(app);
                    }
                }
                continue;
            }
            for (int at = 0; at < static_cast<int>(w.cols.size()); ++at) {
                for (int off = 0; off <= max_off; ++off) {
                    if (rule.floating) {
                        // cheap gate: the first pattern column must match here
                        Column want = pat[0];
                        if (!want.is_axis()) want.level += off;
                        if (!(w.cols[at] == want)) continue;
                    }
                    auto m = match_at(w.cols, at, shifted(pat, off), opt.window_slack);
                    if (!m) continue;
                    MoveApplication app{rule.name, forward, at, off, m->span};
                    // the splice must stay valid
                    try {
                        apply(w, app);
                    } catch (const std::exception&) {
                        continue;
                    }
                    out.push_back(app);
                }
            }
        }
    }
    return out;
}

FrontWord apply(const FrontWord& w, const MoveApplication& app) {
    require_valid(w);
    const MoveRule* rule = rule_table().find(app.rule);
    if (!rule) throw NotApplicable("unknown rule " + app.rule);
    const auto& pat_base = app.forward ? rule->lhs : rule->rhs;
    const auto& rep_base = app.forward ? rule->rhs : rule->lhs;
    const auto& pat_cusps = app.forward ? rule->lhs_axis_cusps : rule->rhs_axis_cusps;
    const auto& rep_cusps = app.forward ? rule->rhs_axis_cusps : rule->lhs_axis_cusps;
    if (app.offset < 0 || (app.offset > 0 && !rule->floating))
        throw NotApplicable("bad level offset for rule " + app.rule);
    std::vector<Column> pat = shifted(pat_base, app.offset);
    std::vector<Column> rep = shifted(rep_base, app.offset);
    if (app.at < 0 || app.at > static_cast<int>(w.cols.size()))
        throw NotApplicable("application position out of range");
    auto m = match_at(w.cols, app.at, pat, 2);
    if (!m) throw NotApplicable("rule " + app.rule + " does not match at column " +
                                std::to_string(app.at));
    FrontWord out;
    out.cols.assign(w.cols.begin(), w.cols.begin() + app.at);
    const int left_off = static_cast<int>(m->left_out.size());
    out.cols.insert(out.cols.end(), m->left_out.begin(), m->left_out.end());
    const int rep_start = static_cast<int>(out.cols.size());
    out.cols.insert(out.cols.end(), rep.begin(), rep.end());
    out.cols.insert(out.cols.end(), m->right_out.begin(), m->right_out.end());
    out.cols.insert(out.cols.end(), w.cols.begin() + app.at + m->span, w.cols.end());

    if (w.anchor) {
        int a = *w.anchor;
        if (a < app.at) {
            out.anchor = a;
        } else if (a >= app.at + m->span) {
            out.anchor = a + static_cast<int>(out.cols.size()) - static_cast<int>(w.cols.size());
        } else {
            // anchor inside the rewritten site: map through the cusp correspondence
            int idx = -1, seen = 0;
            for (int i = app.at; i < app.at + m->span; ++i) {
                if (!w.cols[i].is_axis_cusp()) continue;
                if (i == a) idx = seen;
                ++seen;
            }
            if (idx < 0 || idx >= static_cast<int>(rep_cusps.size()))
                throw NotApplicable("rule " + app.rule + " destroys the anchored cusp");
            (void)pat_cusps;
            (void)left_off;
            out.anchor = rep_start + rep_cusps[idx];
        }
    }
    auto r = validate(out);
    if (!r.valid)
        throw NotApplicable("rule " + app.rule + " at " + std::to_string(app.at) +
                            " leaves an invalid word: " + r.error);
    return out;
}

MoveApplication inverse_of(const MoveApplication& app) {
    MoveApplication inv = app;
    inv.forward = !app.forward;
    return inv;
}

}  // namespace equifront
