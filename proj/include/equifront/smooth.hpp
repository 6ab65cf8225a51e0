#pragma once

#include <vector>

#include "equifront/front.hpp"
#include "equifront/laurent.hpp"

namespace equifront {

class InvalidDiagram : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Transvergent smooth diagram: cusps are replaced by vertical tangencies and
// each crossing column records whether the relatively ascending strand is the
// over-strand ("bad" for the front slope convention).
enum class SmoothKind : uint8_t {
    AxisVTL,    // VTL: pair creation, vertical tangent on the axis
    AxisVTR,    // VTR: pair annihilation
    AxisCross,  // AX o|u
    PairVTL,    // PVTL k
    PairVTR,    // PVTR k
    PairCross,  // PX k o|u
};

struct SmoothCol {
    SmoothKind kind;
    int level = 0;
    bool asc_over = false;  // crossings only

    bool operator==(const SmoothCol&) const = default;
    bool is_crossing() const {
        return kind == SmoothKind::AxisCross || kind == SmoothKind::PairCross;
    }
};

struct SmoothWord {
    std::vector<SmoothCol> cols;
    bool operator==(const SmoothWord&) const = default;
};

ValidationReport validate(const SmoothWord& d);
void require_valid(const SmoothWord& d);

// Text format: header "smoothword v1 <n>", tokens VTL, VTR, PVTL k, PVTR k,
// AX o|u, PX k o|u.
std::string emit_smooth(const SmoothWord& d);
SmoothWord parse_smooth(const std::string& text);

// Front skeleton with the same column structure (tangencies become cusps);
// forgets over/under.
FrontWord smooth_skeleton(const SmoothWord& d);

// Vertical tangencies become cusps; each bad crossing is replaced by one of
// the two local configurations, chosen per crossing by the bit vectors
// (indexed in word order over bad axis / bad pair crossings respectively,
// missing bits default to the first configuration).
FrontWord legendrianize(const SmoothWord& d, const std::vector<bool>& axis_choice = {},
                        const std::vector<bool>& offaxis_choice = {});

// Cusps become vertical tangencies; crossings keep the slope-forced
// over/under (never bad).
SmoothWord forget_legendrian(const FrontWord& w);

int smooth_bad_axis_count(const SmoothWord& d);
int smooth_bad_pair_count(const SmoothWord& d);

// Writhe-corrected bracket of the smooth diagram itself (smooth-type filter).
Laurent smooth_jones_in_A(const SmoothWord& d, int crossing_bound = 24);

}  // namespace equifront
