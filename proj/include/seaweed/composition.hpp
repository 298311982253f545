#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "seaweed/errors.hpp"

namespace seaweed {

// An ordered list of positive parts summing to n. Zero parts are legal on
// input and dropped during normalization; they contribute no flag subspace
// and no arcs downstream.
class Composition {
public:
    explicit Composition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    int part_count() const { return static_cast<int>(parts_.size()); }

    // Strictly increasing, same length as parts(), last entry equals n().
    const std::vector<int>& prefix_sums() const { return prefix_; }

    // 1-based block index k with prefix_sums[k-2] < v <= prefix_sums[k-1].
    int block_of(int v) const;

    // First vertex of block k (1-based), i.e. prefix_sums[k-2] + 1.
    int block_start(int k) const;

    bool operator==(const Composition&) const = default;

private:
    std::vector<int> parts_;
    std::vector<int> prefix_;
    int n_ = 0;
};

// Names the seaweed algebra p(top|bottom). Both compositions share the same n.
struct SeaweedPair {
    Composition top;
    Composition bottom;

    SeaweedPair(Composition top_comp, Composition bottom_comp);

    int n() const { return top.n(); }

    // Canonical interchange form "a1,...,am|b1,...,bt" (no spaces).
    std::string text() const;

    bool operator==(const SeaweedPair&) const = default;
};

// Parses `INT ("," INT)* "|" INT ("," INT)*` with optional whitespace.
// Zero parts are dropped; both sides must sum to the same n and keep at
// least one positive part. Throws ParseError.
SeaweedPair parse_pair(std::string_view text);

// Number of odd parts among top and bottom, with multiplicity.
int odd_part_count(const SeaweedPair& pair);

}  // namespace seaweed
