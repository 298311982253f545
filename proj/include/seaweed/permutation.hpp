#pragma once

#include <string>
#include <vector>

#include "seaweed/meander.hpp"

namespace seaweed {

// sigma = t o b, where t and b are the top/bottom involutions of the
// modified meander (arc partner, or the vertex itself under a loop).
struct MeanderPermutation {
    int n = 0;
    std::vector<int> sigma;                 // sigma[i] for 1 <= i <= n; sigma[0] unused
    std::vector<std::vector<int>> cycles;   // disjoint, cover 1..n, fixed points as 1-cycles

    int operator()(int i) const { return sigma[i]; }
};

// Top-arc partner of i, or i itself when i carries a top loop.
// Requires a modified meander so the map is total.
int top_map(const Meander& m, int i);
int bottom_map(const Meander& m, int i);

MeanderPermutation meander_permutation(const SeaweedPair& pair);

// True iff the decomposition is one cycle of length n.
bool is_full_cycle(const MeanderPermutation& perm);

// Disjoint-cycle notation, e.g. "(1,4)(2,5)(3,7,8,9,6)". Fixed points are
// printed as "(k)" only when include_fixed_points is set; the identity
// renders as "()" without it.
std::string format_cycles(const MeanderPermutation& perm, bool include_fixed_points = false);

}  // namespace seaweed
