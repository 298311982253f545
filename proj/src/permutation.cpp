#include "seaweed/permutation.hpp"

#include <stdexcept>

namespace seaweed {

namespace {

int total_partner(const Meander& m, const std::vector<int>& partner, int i) {
    if (i < 1 || i > m.n) throw std::out_of_range("vertex index outside 1..n");
    int w = partner[i];
    if (w == 0)
        throw std::invalid_argument("map is total only on the modified meander");
    return w;
}

}  // namespace

int top_map(const Meander& m, int i) { return total_partner(m, m.top_partner, i); }

int bottom_map(const Meander& m, int i) { return total_partner(m, m.bottom_partner, i); }

MeanderPermutation meander_permutation(const SeaweedPair& pair) {
    Meander m = build_meander(pair, /*modified=*/true);
    MeanderPermutation perm;
    perm.n = m.n;
    perm.sigma.assign(m.n + 1, 0);
    for (int i = 1; i <= m.n; ++i) perm.sigma[i] = top_map(m, bottom_map(m, i));

    std::vector<char> seen(m.n + 1, 0);
    for (int i = 1; i <= m.n; ++i) {
        if (seen[i]) continue;
        std::vector<int> cycle;
        for (int j = i; !seen[j]; j = perm.sigma[j]) {
            seen[j] = 1;
            cycle.push_back(j);
        }
        perm.cycles.push_back(std::move(cycle));
    }
    return perm;
}

bool is_full_cycle(const MeanderPermutation& perm) {
    return perm.cycles.size() == 1 && static_cast<int>(perm.cycles.front().size()) == perm.n;
}

std::string format_cycles(const MeanderPermutation& perm, bool include_fixed_points) {
    std::string out;
    for (const auto& cycle : perm.cycles) {
        if (cycle.size() == 1 && !include_fixed_points) continue;
        out += '(';
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(cycle[i]);
        }
        out += ')';
    }
    if (out.empty()) out = "()";
    return out;
}

}  // namespace seaweed
