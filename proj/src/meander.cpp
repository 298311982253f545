#include "seaweed/meander.hpp"

#include <algorithm>

#include "seaweed/errors.hpp"

namespace seaweed {

namespace {

void add_side(const Composition& comp, int n, bool modified, std::vector<int>& partner,
              std::vector<std::pair<int, int>>& arcs, std::vector<int>& loops) {
    partner.assign(n + 1, 0);
    for (int k = 1; k <= comp.part_count(); ++k) {
        int s = comp.block_start(k) - 1;
        int a = comp.parts()[k - 1];
        for (int i = 1; i <= a / 2; ++i) {
            int u = s + i;
            int v = s + a + 1 - i;
            partner[u] = v;
            partner[v] = u;
        }
        if (modified && (a & 1)) {
            int mid = s + (a + 1) / 2;
            partner[mid] = mid;
            loops.push_back(mid);
        }
    }
    for (int v = 1; v <= n; ++v)
        if (partner[v] > v) arcs.emplace_back(v, partner[v]);
}

enum class Side { top, bottom };

inline int arc_partner(const Meander& m, Side side, int v) {
    int w = (side == Side::top) ? m.top_partner[v] : m.bottom_partner[v];
    return (w == v) ? 0 : w;  // a loop is not an arc
}

inline Side other(Side s) { return s == Side::top ? Side::bottom : Side::top; }

}  // namespace

int Meander::degree(int v) const {
    int d = 0;
    if (top_partner[v] != 0 && top_partner[v] != v) ++d;
    if (bottom_partner[v] != 0 && bottom_partner[v] != v) ++d;
    return d;
}

Meander build_meander(const SeaweedPair& pair, bool modified) {
    Meander m;
    m.n = pair.n();
    m.modified = modified;
    add_side(pair.top, m.n, modified, m.top_partner, m.top_arcs, m.top_loops);
    add_side(pair.bottom, m.n, modified, m.bottom_partner, m.bottom_arcs, m.bottom_loops);
    return m;
}

ComponentCensus component_census(const Meander& m) {
    ComponentCensus census;
    std::vector<char> seen(m.n + 1, 0);

    // Paths: walk from each degree-1 vertex, alternating top/bottom arcs.
    for (int v = 1; v <= m.n; ++v) {
        if (seen[v] || m.degree(v) != 1) continue;
        std::vector<int> seq{v};
        seen[v] = 1;
        Side side = arc_partner(m, Side::top, v) ? Side::top : Side::bottom;
        int cur = v;
        while (int w = arc_partner(m, side, cur)) {
            if (seen[w]) break;  // guards against inconsistent partner arrays
            seq.push_back(w);
            seen[w] = 1;
            cur = w;
            side = other(side);
        }
        if (seq.back() < seq.front()) std::reverse(seq.begin(), seq.end());
        census.paths.push_back(std::move(seq));
    }

    // Everything left is a closed cycle or an isolated point.
    for (int v = 1; v <= m.n; ++v) {
        if (seen[v]) continue;
        if (m.degree(v) == 0) {
            census.isolated.push_back(v);
            seen[v] = 1;
            continue;
        }
        std::vector<int> seq{v};
        seen[v] = 1;
        Side side = Side::top;
        int cur = v;
        while (true) {
            int w = arc_partner(m, side, cur);
            if (w == v) break;
            seq.push_back(w);
            seen[w] = 1;
            cur = w;
            side = other(side);
        }
        census.cycles.push_back(std::move(seq));
    }

    std::sort(census.paths.begin(), census.paths.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return census;
}

bool is_single_path(const Meander& m) {
    if (m.n == 1) return true;  // the lone vertex is the trivial path
    ComponentCensus census = component_census(m);
    return census.paths.size() == 1 && census.cycles.empty() && census.isolated.empty();
}

std::vector<std::pair<int, int>> dead_ends(const Meander& m, const std::vector<int>& path) {
    std::vector<int> in_line = path;
    std::sort(in_line.begin(), in_line.end());

    bool valid = false;
    if (m.n == 1 && in_line == std::vector<int>{1}) {
        valid = true;
    } else {
        ComponentCensus census = component_census(m);
        for (const auto& p : census.paths) {
            std::vector<int> sorted = p;
            std::sort(sorted.begin(), sorted.end());
            if (sorted == in_line) {
                valid = true;
                break;
            }
        }
    }
    if (!valid) throw NotAPathComponent("vertex sequence is not a path component of the meander");

    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i + 1 < in_line.size(); ++i) {
        int u = in_line[i], w = in_line[i + 1];
        if (arc_partner(m, Side::top, u) == w || arc_partner(m, Side::bottom, u) == w)
            out.emplace_back(u, w);
    }
    return out;
}

std::vector<int> degree_profile(const Meander& m) {
    std::vector<int> deg(m.n);
    for (int v = 1; v <= m.n; ++v) deg[v - 1] = m.degree(v);
    return deg;
}

}  // namespace seaweed
