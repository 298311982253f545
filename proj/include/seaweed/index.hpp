#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "seaweed/composition.hpp"

namespace seaweed {

enum class IndexMethod { meander, closed_form, oracle };

std::string to_string(IndexMethod method);

// Index of the seaweed subalgebra of sl(n): connected components of the
// meander plus closed cycles, minus one for the sl normalization.
struct IndexReport {
    SeaweedPair pair;
    int components = 0;  // paths + cycles + isolated points
    int cycles = 0;
    int index_sl = 0;
    bool frobenius = false;
    IndexMethod method = IndexMethod::meander;
};

IndexReport dk_index(const SeaweedPair& pair);

bool is_frobenius(const SeaweedPair& pair);

// Conditions any Frobenius pair must satisfy. A violation is either an odd
// part count different from two, or equal proper partial sums (same number
// of leading parts on both sides summing to s < n), which splits the
// algebra into a direct sum.
struct Violation {
    enum class Kind { odd_count_not_two, equal_partial_sums };
    Kind kind;
    int value = 0;  // the odd count, or the split position r
    int sum = 0;    // the common partial sum (equal_partial_sums only)

    bool operator==(const Violation&) const = default;
};

std::vector<Violation> necessary_conditions(const SeaweedPair& pair);

enum class FamilyKind {
    maximal_parabolic,     // (a,b|n)
    opposite_maximal,      // (a,b|c,d)
    submaximal_parabolic,  // (a,b,c|n)
    panyushev_odd,         // (2,...,2,1|1,2,...,2), n odd
    panyushev_even,        // (1,2,...,2,1|2,...,2), n even
    other,
};

std::string to_string(FamilyKind kind);

struct FamilyTag {
    FamilyKind kind = FamilyKind::other;
    // maximal: {a,b,n}; opposite: {a,b,c,d}; submaximal: {a,b,c,n};
    // panyushev: {n}; other: {}.
    std::vector<int> parameters;

    bool operator==(const FamilyTag&) const = default;
};

// Most specific tag first: panyushev shapes win over the parabolic shapes.
FamilyTag classify_family(const SeaweedPair& pair);

// Frobenius verdict from the family's gcd criterion; nullopt when no closed
// form is known for the shape.
std::optional<bool> closed_form_frobenius(const FamilyTag& tag);

// Index of the maximal parabolic (a, n-a | n): gcd(a, n) - 1.
int elashvili_index(int a, int n);

nlohmann::json to_json(const IndexReport& report);

}  // namespace seaweed
