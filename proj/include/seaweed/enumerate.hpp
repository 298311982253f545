#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <vector>

#include "seaweed/index.hpp"

namespace seaweed {

// All compositions of n into positive parts, lexicographic on part lists.
// There are exactly 2^(n-1) of them.
std::vector<std::vector<int>> compositions_of(int n);

long long pair_count(int n);  // 4^(n-1)

// Every ordered pair of compositions of n exactly once, top side major,
// both sides in lexicographic order.
void for_each_pair(int n, const std::function<void(const SeaweedPair&)>& fn);

struct SweepSpec {
    int n_min = 1;
    int n_max = 1;
    std::optional<FamilyKind> shape_filter;
    enum class Predicate { all, frobenius, necessary_pass } predicate = Predicate::all;
    int threads = 0;  // 0 = hardware concurrency
};

struct SweepRow {
    SeaweedPair pair;
    int components = 0;
    int cycles = 0;
    int index_sl = 0;
    bool frobenius = false;
    FamilyTag family;
    std::optional<bool> closed_form;
    bool agree = true;  // false only when a closed form exists and disagrees
};

struct SweepSummary {
    int n_min = 0;
    int n_max = 0;
    long long pairs = 0;      // pairs enumerated (before the predicate filter)
    long long rows = 0;       // rows emitted
    long long frobenius = 0;  // Frobenius pairs among those enumerated
    long long violations = 0; // always 0 on normal return
};

// Streams rows in canonical order (n ascending, then top-major lexicographic)
// to the sink on the calling thread; work is partitioned across threads by
// top composition and merged back in order. A closed-form disagreement
// throws TheoremViolation naming the pair.
SweepSummary run_sweep(const SweepSpec& spec, const std::function<void(const SweepRow&)>& sink);

// CSV interchange format.
void write_csv_header(std::ostream& os);
void write_csv_row(std::ostream& os, const SweepRow& row);

nlohmann::json to_json(const SweepRow& row);

// Family theorem checks: recompute every family member's meander verdict and
// compare with the closed form (or with an injected predicate, for testing
// the violation machinery). Throws TheoremViolation on any mismatch.
struct FamilyCheck {
    FamilyKind kind;
    long long pairs_checked = 0;
};

FamilyCheck verify_family(FamilyKind kind, int max_n,
                          const std::function<bool(const FamilyTag&)>& predicate_override = {});

}  // namespace seaweed
