#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equifront/front.hpp"
#include "equifront/laurent.hpp"
#include "equifront/moves.hpp"
#include "equifront/stabilize.hpp"

namespace equifront {

struct SearchBudget {
    int max_columns = 24;
    int max_above_strands = 6;
    long long max_nodes = 200000;
    std::vector<int> growth_schedule = {0, 3};
    std::vector<int> window_schedule = {2};

    static SearchBudget from_env();  // EQUIFRONT_BUDGET=<max_nodes>
};

struct CertStep {
    enum Kind { Move, Stabilize } kind = Move;
    MoveApplication move;
    int cusp_col = 0;  // stabilization steps
    StabKind stab = StabKind::S;
};

struct Certificate {
    FrontWord start, end;
    std::vector<CertStep> steps;
};

std::string emit_certificate(const Certificate& c);
Certificate parse_certificate(const std::string& text);

// Mechanically re-run the certificate; throws if a step fails. Returns the
// final word, which matches `end` up to canonical form.
FrontWord replay(const Certificate& c);

struct SearchOutcome {
    enum Kind { Equivalent, Refuted, Inconclusive } kind = Inconclusive;
    std::optional<Certificate> certificate;
    std::string refutation;  // which obstruction fired
    long long nodes = 0;
};

// Bounded bidirectional search over canonical forms. Refutations compare tb,
// component count, bracket, and anchored rotation (at the anchors when both
// words are marked, as multisets otherwise).
SearchOutcome equivalent(const FrontWord& a, const FrontWord& b, const SearchBudget& budget = {},
                         int threads = 1);

// Tries all placements of up to max_stabs link-level S-stabilizations on each
// side to equalize tb, then searches.
SearchOutcome equivalent_after_S_stabilizations(const FrontWord& a, const FrontWord& b,
                                                int max_stabs, const SearchBudget& budget = {});

struct MaxTbResult {
    bool found = false;
    int best_tb = 0;
    FrontWord witness;
    long long nodes = 0;
    bool budget_exhausted = false;
};

// Enumerates valid transvergent words (column count, then lexicographic) and
// reports the maximal tb among those whose writhe-corrected bracket matches.
MaxTbResult max_tb_experiment(const Laurent& target_jones_A, const SearchBudget& budget = {});

}  // namespace equifront
