#include "seaweed/composition.hpp"

#include <cctype>
#include <limits>
#include <utility>

namespace seaweed {

namespace {

constexpr int kMaxPart = 100'000'000;  // keeps sums well inside int range

}  // namespace

Composition::Composition(std::vector<int> parts) {
    parts_.reserve(parts.size());
    long long sum = 0;
    for (int p : parts) {
        if (p < 0) throw std::invalid_argument("composition parts must be nonnegative");
        if (p > kMaxPart) throw std::invalid_argument("composition part too large");
        if (p == 0) continue;
        parts_.push_back(p);
        sum += p;
    }
    if (parts_.empty()) throw std::invalid_argument("composition has no positive part");
    if (sum > std::numeric_limits<int>::max())
        throw std::invalid_argument("composition sum overflows");
    n_ = static_cast<int>(sum);
    prefix_.reserve(parts_.size());
    int acc = 0;
    for (int p : parts_) {
        acc += p;
        prefix_.push_back(acc);
    }
}

int Composition::block_of(int v) const {
    if (v < 1 || v > n_) throw std::out_of_range("vertex index outside 1..n");
    // prefix_ is strictly increasing; find the first prefix sum >= v.
    int lo = 0, hi = static_cast<int>(prefix_.size()) - 1;
    while (lo < hi) {
        int mid = (lo + hi) / 2;
        if (prefix_[mid] >= v)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo + 1;
}

int Composition::block_start(int k) const {
    if (k < 1 || k > part_count()) throw std::out_of_range("block index outside 1..m");
    return k == 1 ? 1 : prefix_[k - 2] + 1;
}

SeaweedPair::SeaweedPair(Composition top_comp, Composition bottom_comp)
    : top(std::move(top_comp)), bottom(std::move(bottom_comp)) {
    if (top.n() != bottom.n())
        throw std::invalid_argument("seaweed pair requires equal sums on both sides");
}

std::string SeaweedPair::text() const {
    std::string out;
    auto append_parts = [&out](const std::vector<int>& parts) {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(parts[i]);
        }
    };
    append_parts(top.parts());
    out += '|';
    append_parts(bottom.parts());
    return out;
}

namespace {

struct PairScanner {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(ParseError::Kind::malformed, what, pos);
    }

    int read_int() {
        skip_ws();
        std::size_t start = pos;
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected an integer");
        long long value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            if (value > kMaxPart) {
                pos = start;
                fail("part value out of range");
            }
            ++pos;
        }
        return static_cast<int>(value);
    }

    // Reads `INT ("," INT)*` and the positions of the raw tokens.
    std::vector<int> read_side() {
        std::vector<int> parts;
        parts.push_back(read_int());
        while (true) {
            skip_ws();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                parts.push_back(read_int());
            } else {
                break;
            }
        }
        return parts;
    }
};

long long positive_sum(const std::vector<int>& parts) {
    long long sum = 0;
    for (int p : parts) sum += p;
    return sum;
}

bool all_zero(const std::vector<int>& parts) {
    for (int p : parts)
        if (p != 0) return false;
    return true;
}

}  // namespace

SeaweedPair parse_pair(std::string_view text) {
    PairScanner scan{text};
    std::size_t top_start = 0;
    scan.skip_ws();
    top_start = scan.pos;
    std::vector<int> top_parts = scan.read_side();
    scan.skip_ws();
    if (scan.pos >= text.size() || text[scan.pos] != '|') scan.fail("expected '|'");
    ++scan.pos;
    std::size_t bottom_start = scan.pos;
    std::vector<int> bottom_parts = scan.read_side();
    scan.skip_ws();
    if (scan.pos != text.size()) scan.fail("unexpected trailing input");

    if (all_zero(top_parts))
        throw ParseError(ParseError::Kind::empty_composition,
                         "top composition has no positive part", top_start);
    if (all_zero(bottom_parts))
        throw ParseError(ParseError::Kind::empty_composition,
                         "bottom composition has no positive part", bottom_start);
    if (positive_sum(top_parts) != positive_sum(bottom_parts))
        throw ParseError(ParseError::Kind::sum_mismatch,
                         "sides sum to different totals", bottom_start);

    return SeaweedPair(Composition(std::move(top_parts)), Composition(std::move(bottom_parts)));
}

int odd_part_count(const SeaweedPair& pair) {
    int count = 0;
    for (int p : pair.top.parts()) count += p & 1;
    for (int p : pair.bottom.parts()) count += p & 1;
    return count;
}

}  // namespace seaweed
