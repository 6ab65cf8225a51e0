#pragma once

#include <map>
#include <vector>

#include "equifront/diagram.hpp"
#include "equifront/front.hpp"
#include "equifront/laurent.hpp"

namespace equifront {

class MultiComponent : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class TooManyCrossings : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct InvariantRecord {
    int tb = 0;
    int rot = 0;
    std::map<int, int> rot_anchored;  // on-axis cusp column -> anchored rotation
    int writhe = 0;
    int cusp_count = 0;
    int up_cusps = 0;
    int down_cusps = 0;
    int component_count = 0;
};

inline constexpr int kDefaultCrossingBound = 24;

// Planar diagram with slope-forced over/under; alias for the resolver.
FrontDiagram resolve_crossings(const FrontWord& w);

int writhe(const Diagram& d, const std::vector<int8_t>& dir);
int cusp_count(const Diagram& d);
int rotation_of(const Diagram& d, const std::vector<int8_t>& dir);

int thurston_bennequin(const FrontWord& w);
int rotation(const FrontWord& w, const StrandMarking& m);
int anchored_rotation(const FrontWord& w, int anchor_col);

// tb of a plain (non-equivariant) front; single component required.
int plain_tb(const PlainWord& w);
int plain_rotation(const PlainWord& w, const std::vector<int8_t>& dir);

// Kauffman bracket in the variable A, unknot = 1.
Laurent kauffman_bracket_plain(const PlainWord& w, int crossing_bound = kDefaultCrossingBound);
Laurent kauffman_bracket(const FrontWord& w, int crossing_bound = kDefaultCrossingBound);

// Variants with explicit over/under bits per crossing (in word order);
// asc_over = true flips the smoothing coefficients at that crossing.
Laurent kauffman_bracket_plain_bits(const PlainWord& w, const std::vector<bool>& asc_over,
                                    int crossing_bound = kDefaultCrossingBound);
Laurent jones_in_A_plain_bits(const PlainWord& w, const std::vector<bool>& asc_over,
                              int crossing_bound = kDefaultCrossingBound);
int writhe_bits(const Diagram& d, const std::vector<int8_t>& dir,
                const std::vector<bool>& asc_over);

// Writhe-corrected bracket (-A^3)^(-w) * <D>, still in A.
Laurent jones_in_A(const FrontWord& w, int crossing_bound = kDefaultCrossingBound);
Laurent jones_in_A_plain(const PlainWord& w, int crossing_bound = kDefaultCrossingBound);
// Substitution t = A^(-4); throws if exponents are not multiples of 4.
Laurent jones_in_t(const Laurent& jones_A);

InvariantRecord invariants(const FrontWord& w);

}  // namespace equifront
