#include "seaweed/index.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "seaweed/meander.hpp"

namespace seaweed {

std::string to_string(IndexMethod method) {
    switch (method) {
        case IndexMethod::meander: return "meander";
        case IndexMethod::closed_form: return "closed_form";
        case IndexMethod::oracle: return "oracle";
    }
    return "?";
}

std::string to_string(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::maximal_parabolic: return "maximal_parabolic";
        case FamilyKind::opposite_maximal: return "opposite_maximal";
        case FamilyKind::submaximal_parabolic: return "submaximal_parabolic";
        case FamilyKind::panyushev_odd: return "panyushev_odd";
        case FamilyKind::panyushev_even: return "panyushev_even";
        case FamilyKind::other: return "other";
    }
    return "?";
}

IndexReport dk_index(const SeaweedPair& pair) {
    ComponentCensus census = component_census(build_meander(pair));
    IndexReport report{pair};
    report.components = census.components();
    report.cycles = static_cast<int>(census.cycles.size());
    report.index_sl = report.components + report.cycles - 1;
    report.frobenius = report.index_sl == 0;
    report.method = IndexMethod::meander;
    return report;
}

bool is_frobenius(const SeaweedPair& pair) { return dk_index(pair).index_sl == 0; }

std::vector<Violation> necessary_conditions(const SeaweedPair& pair) {
    std::vector<Violation> out;
    int odd = odd_part_count(pair);
    if (odd != 2) out.push_back({Violation::Kind::odd_count_not_two, odd, 0});

    const auto& top = pair.top.prefix_sums();
    const auto& bottom = pair.bottom.prefix_sums();
    std::size_t r_max = std::min(top.size(), bottom.size());
    for (std::size_t r = 0; r < r_max; ++r) {
        // The full sum n is always shared and splits nothing.
        if (top[r] == bottom[r] && top[r] < pair.n())
            out.push_back({Violation::Kind::equal_partial_sums, static_cast<int>(r + 1), top[r]});
    }
    return out;
}

namespace {

bool is_panyushev_odd(const SeaweedPair& p) {
    if (p.n() % 2 == 0) return false;
    const auto& a = p.top.parts();
    const auto& b = p.bottom.parts();
    if (a.size() != b.size()) return false;
    if (a.back() != 1 || b.front() != 1) return false;
    return std::all_of(a.begin(), a.end() - 1, [](int x) { return x == 2; }) &&
           std::all_of(b.begin() + 1, b.end(), [](int x) { return x == 2; });
}

bool is_panyushev_even(const SeaweedPair& p) {
    if (p.n() % 2 != 0) return false;
    const auto& a = p.top.parts();
    const auto& b = p.bottom.parts();
    if (a.size() < 2 || a.front() != 1 || a.back() != 1) return false;
    if (!std::all_of(a.begin() + 1, a.end() - 1, [](int x) { return x == 2; })) return false;
    return std::all_of(b.begin(), b.end(), [](int x) { return x == 2; });
}

}  // namespace

FamilyTag classify_family(const SeaweedPair& pair) {
    const auto& a = pair.top.parts();
    const auto& b = pair.bottom.parts();
    if (is_panyushev_odd(pair)) return {FamilyKind::panyushev_odd, {pair.n()}};
    if (is_panyushev_even(pair)) return {FamilyKind::panyushev_even, {pair.n()}};
    if (a.size() == 3 && b.size() == 1)
        return {FamilyKind::submaximal_parabolic, {a[0], a[1], a[2], pair.n()}};
    if (a.size() == 2 && b.size() == 2)
        return {FamilyKind::opposite_maximal, {a[0], a[1], b[0], b[1]}};
    if (a.size() == 2 && b.size() == 1)
        return {FamilyKind::maximal_parabolic, {a[0], a[1], pair.n()}};
    return {FamilyKind::other, {}};
}

std::optional<bool> closed_form_frobenius(const FamilyTag& tag) {
    const auto& p = tag.parameters;
    switch (tag.kind) {
        case FamilyKind::maximal_parabolic:
            return std::gcd(p[0], p[2]) == 1;
        case FamilyKind::opposite_maximal:
            // gcd(0, n) = n, so a = c is correctly non-Frobenius for n > 1.
            return std::gcd(std::abs(p[0] - p[2]), p[0] + p[1]) == 1;
        case FamilyKind::submaximal_parabolic:
            return std::gcd(p[0] + p[1], p[1] + p[2]) == 1;
        case FamilyKind::panyushev_odd:
        case FamilyKind::panyushev_even:
            return true;
        case FamilyKind::other:
            return std::nullopt;
    }
    return std::nullopt;
}

int elashvili_index(int a, int n) {
    if (a < 1 || a >= n) throw std::out_of_range("elashvili_index requires 1 <= a < n");
    return std::gcd(a, n) - 1;
}

nlohmann::json to_json(const IndexReport& report) {
    return nlohmann::json{
        {"pair", report.pair.text()},
        {"components", report.components},
        {"cycles", report.cycles},
        {"index_sl", report.index_sl},
        {"frobenius", report.frobenius},
        {"method", to_string(report.method)},
    };
}

}  // namespace seaweed
