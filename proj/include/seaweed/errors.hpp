#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seaweed {

// Raised by parse_pair. `position` is the byte offset of the offending token
// in the original input, for caret-annotated diagnostics.
class ParseError : public std::runtime_error {
public:
    enum class Kind { malformed, sum_mismatch, empty_composition };

    ParseError(Kind kind, std::string message, std::size_t position)
        : std::runtime_error(std::move(message)), kind_(kind), position_(position) {}

    Kind kind() const { return kind_; }
    std::size_t position() const { return position_; }

private:
    Kind kind_;
    std::size_t position_;
};

class NotAPathComponent : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Kirillov form matrix is not invertible; no r-matrix exists for this functional.
class SingularForm : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Every sampled functional fell short of a rank the caller had already
// certified. Signals too few trials; the misleading estimate is never returned.
class DegenerateTrials : public std::runtime_error {
public:
    DegenerateTrials(std::string message, int best_rank, int certified_rank)
        : std::runtime_error(std::move(message)),
          best_rank_(best_rank),
          certified_rank_(certified_rank) {}

    int best_rank() const { return best_rank_; }
    int certified_rank() const { return certified_rank_; }

private:
    int best_rank_;
    int certified_rank_;
};

// A closed-form classification disagreed with the meander index on a pair.
class TheoremViolation : public std::runtime_error {
public:
    TheoremViolation(std::string pair_text, bool closed_form_verdict, bool meander_verdict)
        : std::runtime_error("theorem violation on pair " + pair_text +
                             ": closed form says " + (closed_form_verdict ? "true" : "false") +
                             ", meander says " + (meander_verdict ? "true" : "false")),
          pair_text_(std::move(pair_text)),
          closed_form_verdict_(closed_form_verdict),
          meander_verdict_(meander_verdict) {}

    TheoremViolation(std::string pair_text, const std::string& detail)
        : std::runtime_error("theorem violation on pair " + pair_text + ": " + detail),
          pair_text_(std::move(pair_text)) {}

    const std::string& pair_text() const { return pair_text_; }
    bool closed_form_verdict() const { return closed_form_verdict_; }
    bool meander_verdict() const { return meander_verdict_; }

private:
    std::string pair_text_;
    bool closed_form_verdict_;
    bool meander_verdict_;
};

}  // namespace seaweed
