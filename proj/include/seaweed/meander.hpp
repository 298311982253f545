#pragma once

#include <utility>
#include <vector>

#include "seaweed/composition.hpp"

namespace seaweed {

// Arc multigraph on vertices 1..n. Each block of the top composition
// contributes nested arcs above the line: block [s+1, s+a] joins s+i to
// s+a+1-i for 1 <= i <= a/2; the bottom composition does the same below the
// line. A vertex therefore carries at most one top arc and at most one
// bottom arc. The modified meander additionally puts a loop at the middle
// vertex of every odd block, making both incidences total.
struct Meander {
    int n = 0;
    bool modified = false;

    // partner[v] = other endpoint of v's arc, v itself for a loop, 0 if none.
    std::vector<int> top_partner;
    std::vector<int> bottom_partner;

    // Arc/loop lists in deterministic order (by left endpoint).
    std::vector<std::pair<int, int>> top_arcs;
    std::vector<std::pair<int, int>> bottom_arcs;
    std::vector<int> top_loops;
    std::vector<int> bottom_loops;

    // Arc degree of v; loops do not count.
    int degree(int v) const;

    bool operator==(const Meander&) const = default;
};

Meander build_meander(const SeaweedPair& pair, bool modified = false);

// Decomposition of the plain meander into paths, closed cycles, and isolated
// points; the member lists partition {1..n}. Loops are ignored throughout.
struct ComponentCensus {
    std::vector<std::vector<int>> paths;   // each starts at its smaller endpoint
    std::vector<std::vector<int>> cycles;  // each starts at its smallest vertex
    std::vector<int> isolated;

    int components() const {
        return static_cast<int>(paths.size() + cycles.size() + isolated.size());
    }
};

ComponentCensus component_census(const Meander& m);

// True iff the meander is one path through all n vertices with no cycles and
// no isolated points. The one-vertex meander counts as the trivial path.
bool is_single_path(const Meander& m);

// Intervals (u_i, u_{i+1}) between line-consecutive vertices of the given
// path component that are joined by an arc of m. The path is identified by
// its vertex set; throws NotAPathComponent otherwise.
std::vector<std::pair<int, int>> dead_ends(const Meander& m, const std::vector<int>& path);

// degree_profile(m)[v-1] is the arc degree of vertex v (0..2).
std::vector<int> degree_profile(const Meander& m);

}  // namespace seaweed
