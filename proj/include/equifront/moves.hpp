#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equifront/front.hpp"

namespace equifront {

class RuleValidationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class NotApplicable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A local rewrite between two word fragments with equal boundary interface.
// Pure-pair fragments float in level (applied at an offset); fragments with
// axis events are pinned.
struct MoveRule {
    std::string name;          // LR1a, LR2mL, CX, CXr, CC, CR, ...
    bool rotated = false;      // generated from the base rule by pi-rotation
    std::vector<Column> lhs, rhs;
    bool floating = false;     // no axis events: may shift levels
    int entry_k = 0;           // above-axis strands consumed at the left edge
    int exit_k = 0;
    // indices of on-axis cusp columns within each side, in order; the anchor
    // correspondence is positional
    std::vector<int> lhs_axis_cusps, rhs_axis_cusps;
};

struct MoveApplication {
    std::string rule;
    bool forward = true;  // lhs -> rhs
    int at = 0;           // column position in the word
    int offset = 0;       // level offset for floating rules (offset >= 0)
    // columns consumed at the site (with commuted foreigners re-ordered);
    // filled by the matcher so apply() can reproduce the exact splice
    int span = 0;  // number of original columns consumed, including foreigners

    bool operator==(const MoveApplication&) const = default;
};

struct MoveTable {
    std::vector<MoveRule> rules;
    const MoveRule* find(const std::string& name) const;
};

// Complete validated rule set (base rules, pi-rotations, bidirectional).
const MoveTable& rule_table();
// Parse/load from the shipped rule format; validates every rule.
MoveTable load_rule_table(const std::string& text);
std::string default_rule_text();

// Commutation of adjacent columns (equivariant planar isotopy).
std::optional<std::pair<Column, Column>> try_swap(const Column& a, const Column& b);

// Unique word under greedy left-shifting of commuting columns.
FrontWord canonical_form(const FrontWord& w);
bool canonically_equal(const FrontWord& a, const FrontWord& b);

struct MoveOptions {
    int growth_budget = 2;   // extra columns allowed for expanding directions
    int window_slack = 2;    // commuted foreign columns tolerated in a match
};

std::vector<MoveApplication> applicable_moves(const FrontWord& w, const MoveOptions& opt = {});
FrontWord apply(const FrontWord& w, const MoveApplication& app);

// Inverse application against the result word (bidirectionality helper).
MoveApplication inverse_of(const MoveApplication& app);

}  // namespace equifront
