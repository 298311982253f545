#include "seaweed/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <mutex>
#include <numeric>
#include <thread>

#include "seaweed/meander.hpp"

namespace seaweed {

namespace {

void gen_compositions(int remaining, std::vector<int>& current,
                      std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (int first = 1; first <= remaining; ++first) {
        current.push_back(first);
        gen_compositions(remaining - first, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> compositions_of(int n) {
    if (n < 1) throw std::invalid_argument("compositions require n >= 1");
    std::vector<std::vector<int>> out;
    out.reserve(std::size_t{1} << std::min(n - 1, 20));
    std::vector<int> current;
    gen_compositions(n, current, out);
    return out;
}

long long pair_count(int n) {
    long long side = 1LL << (n - 1);
    return side * side;
}

void for_each_pair(int n, const std::function<void(const SeaweedPair&)>& fn) {
    std::vector<std::vector<int>> comps = compositions_of(n);
    std::vector<Composition> sides;
    sides.reserve(comps.size());
    for (auto& parts : comps) sides.emplace_back(parts);
    for (const Composition& top : sides)
        for (const Composition& bottom : sides) fn(SeaweedPair(top, bottom));
}

namespace {

SweepRow make_row(const SeaweedPair& pair) {
    SweepRow row{pair, 0, 0, 0, false, {}, {}, true};
    ComponentCensus census = component_census(build_meander(pair));
    row.components = census.components();
    row.cycles = static_cast<int>(census.cycles.size());
    row.index_sl = row.components + row.cycles - 1;
    row.frobenius = row.index_sl == 0;
    row.family = classify_family(pair);
    row.closed_form = closed_form_frobenius(row.family);
    row.agree = !row.closed_form || *row.closed_form == row.frobenius;
    return row;
}

bool passes_predicate(const SweepRow& row, SweepSpec::Predicate predicate) {
    switch (predicate) {
        case SweepSpec::Predicate::all: return true;
        case SweepSpec::Predicate::frobenius: return row.frobenius;
        case SweepSpec::Predicate::necessary_pass:
            return necessary_conditions(row.pair).empty();
    }
    return true;
}

// Family members of a given n, in top-major lexicographic order. The tag
// filter still goes through classify_family afterwards so the most-specific
// classification rule applies.
std::vector<SeaweedPair> family_pairs(FamilyKind kind, int n) {
    std::vector<SeaweedPair> out;
    auto pair_of = [](std::vector<int> top, std::vector<int> bottom) {
        return SeaweedPair(Composition(std::move(top)), Composition(std::move(bottom)));
    };
    switch (kind) {
        case FamilyKind::maximal_parabolic:
            for (int a = 1; a < n; ++a) out.push_back(pair_of({a, n - a}, {n}));
            break;
        case FamilyKind::opposite_maximal:
            for (int a = 1; a < n; ++a)
                for (int c = 1; c < n; ++c) out.push_back(pair_of({a, n - a}, {c, n - c}));
            break;
        case FamilyKind::submaximal_parabolic:
            for (int a = 1; a <= n - 2; ++a)
                for (int b = 1; b <= n - a - 1; ++b) out.push_back(pair_of({a, b, n - a - b}, {n}));
            break;
        case FamilyKind::panyushev_odd:
            if (n % 2 == 1) {
                std::vector<int> top((n - 1) / 2, 2), bottom{1};
                top.push_back(1);
                bottom.insert(bottom.end(), (n - 1) / 2, 2);
                out.push_back(pair_of(std::move(top), std::move(bottom)));
            }
            break;
        case FamilyKind::panyushev_even:
            if (n % 2 == 0 && n >= 2) {
                std::vector<int> top{1}, bottom(n / 2, 2);
                top.insert(top.end(), (n - 2) / 2, 2);
                top.push_back(1);
                out.push_back(pair_of(std::move(top), std::move(bottom)));
            }
            break;
        case FamilyKind::other:
            break;
    }
    return out;
}

struct ChunkOutput {
    std::vector<SweepRow> rows;
    long long pairs = 0;
    long long frobenius = 0;
    bool done = false;
};

// Partition the top compositions across workers; the sink only ever runs on
// the calling thread and sees chunks in canonical order.
void sweep_one_n_parallel(int n, const SweepSpec& spec, SweepSummary& summary,
                          const std::function<void(const SweepRow&)>& sink) {
    std::vector<std::vector<int>> comps = compositions_of(n);
    std::vector<Composition> sides;
    sides.reserve(comps.size());
    for (auto& parts : comps) sides.emplace_back(parts);

    int worker_count = spec.threads > 0 ? spec.threads
                                        : static_cast<int>(std::thread::hardware_concurrency());
    if (worker_count < 1) worker_count = 1;
    int chunk_count = static_cast<int>(sides.size());
    int max_ahead = worker_count * 4;

    std::vector<ChunkOutput> chunks(chunk_count);
    std::atomic<int> next_chunk{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex mu;
    std::condition_variable cv;
    int drained = 0;

    auto process_chunk = [&](int k) {
        ChunkOutput out;
        const Composition& top = sides[k];
        for (const Composition& bottom : sides) {
            SweepRow row = make_row(SeaweedPair(top, bottom));
            ++out.pairs;
            if (row.frobenius) ++out.frobenius;
            if (!row.agree)
                throw TheoremViolation(row.pair.text(), *row.closed_form, row.frobenius);
            if (passes_predicate(row, spec.predicate)) out.rows.push_back(std::move(row));
        }
        return out;
    };

    auto worker = [&] {
        while (!failed.load()) {
            int k = next_chunk.fetch_add(1);
            if (k >= chunk_count) return;
            {
                std::unique_lock<std::mutex> lock(mu);
                cv.wait(lock, [&] { return failed.load() || k - drained < max_ahead; });
                if (failed.load()) return;
            }
            try {
                ChunkOutput out = process_chunk(k);
                std::lock_guard<std::mutex> lock(mu);
                chunks[k] = std::move(out);
                chunks[k].done = true;
                cv.notify_all();
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!error) error = std::current_exception();
                failed.store(true);
                cv.notify_all();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(worker_count);
    for (int t = 0; t < worker_count; ++t) pool.emplace_back(worker);

    try {
        for (int k = 0; k < chunk_count && !failed.load(); ++k) {
            ChunkOutput out;
            {
                std::unique_lock<std::mutex> lock(mu);
                cv.wait(lock, [&] { return failed.load() || chunks[k].done; });
                if (failed.load()) break;
                out = std::move(chunks[k]);
                drained = k + 1;
                cv.notify_all();
            }
            summary.pairs += out.pairs;
            summary.frobenius += out.frobenius;
            for (const SweepRow& row : out.rows) {
                ++summary.rows;
                sink(row);
            }
        }
    } catch (...) {
        {
            std::lock_guard<std::mutex> lock(mu);
            if (!error) error = std::current_exception();
            failed.store(true);
            cv.notify_all();
        }
        for (auto& t : pool) t.join();
        std::rethrow_exception(error);
    }

    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace

SweepSummary run_sweep(const SweepSpec& spec, const std::function<void(const SweepRow&)>& sink) {
    if (spec.n_min < 1 || spec.n_max < spec.n_min)
        throw std::invalid_argument("sweep range must be nonempty with n >= 1");

    SweepSummary summary;
    summary.n_min = spec.n_min;
    summary.n_max = spec.n_max;

    for (int n = spec.n_min; n <= spec.n_max; ++n) {
        if (spec.shape_filter) {
            for (const SeaweedPair& pair : family_pairs(*spec.shape_filter, n)) {
                SweepRow row = make_row(pair);
                if (row.family.kind != *spec.shape_filter) continue;
                ++summary.pairs;
                if (row.frobenius) ++summary.frobenius;
                if (!row.agree)
                    throw TheoremViolation(row.pair.text(), *row.closed_form, row.frobenius);
                if (passes_predicate(row, spec.predicate)) {
                    ++summary.rows;
                    sink(row);
                }
            }
        } else {
            sweep_one_n_parallel(n, spec, summary, sink);
        }
    }
    return summary;
}

namespace {

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

std::string parts_text(const Composition& c) {
    std::string out;
    for (std::size_t i = 0; i < c.parts().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(c.parts()[i]);
    }
    return out;
}

}  // namespace

void write_csv_header(std::ostream& os) {
    os << "top,bottom,n,components,cycles,index_sl,frobenius,family,closed_form,agree\n";
}

void write_csv_row(std::ostream& os, const SweepRow& row) {
    os << csv_quote(parts_text(row.pair.top)) << ',' << csv_quote(parts_text(row.pair.bottom))
       << ',' << row.pair.n() << ',' << row.components << ',' << row.cycles << ','
       << row.index_sl << ',' << (row.frobenius ? "true" : "false") << ','
       << to_string(row.family.kind) << ','
       << (row.closed_form ? (*row.closed_form ? "true" : "false") : "") << ','
       << (row.agree ? "true" : "false") << '\n';
}

nlohmann::json to_json(const SweepRow& row) {
    nlohmann::json j{
        {"top", parts_text(row.pair.top)},
        {"bottom", parts_text(row.pair.bottom)},
        {"n", row.pair.n()},
        {"components", row.components},
        {"cycles", row.cycles},
        {"index_sl", row.index_sl},
        {"frobenius", row.frobenius},
        {"family", to_string(row.family.kind)},
        {"agree", row.agree},
    };
    if (row.closed_form)
        j["closed_form"] = *row.closed_form;
    else
        j["closed_form"] = nullptr;
    return j;
}

FamilyCheck verify_family(FamilyKind kind, int max_n,
                          const std::function<bool(const FamilyTag&)>& predicate_override) {
    FamilyCheck check{kind, 0};
    for (int n = 1; n <= max_n; ++n) {
        for (const SeaweedPair& pair : family_pairs(kind, n)) {
            FamilyTag tag{kind, {}};
            const auto& a = pair.top.parts();
            const auto& b = pair.bottom.parts();
            switch (kind) {
                case FamilyKind::maximal_parabolic: tag.parameters = {a[0], a[1], n}; break;
                case FamilyKind::opposite_maximal: tag.parameters = {a[0], a[1], b[0], b[1]}; break;
                case FamilyKind::submaximal_parabolic: tag.parameters = {a[0], a[1], a[2], n}; break;
                case FamilyKind::panyushev_odd:
                case FamilyKind::panyushev_even: tag.parameters = {n}; break;
                case FamilyKind::other: break;
            }

            IndexReport report = dk_index(pair);
            bool claimed = predicate_override ? predicate_override(tag)
                                              : closed_form_frobenius(tag).value();
            if (claimed != report.frobenius)
                throw TheoremViolation(pair.text(), claimed, report.frobenius);

            if (kind == FamilyKind::maximal_parabolic &&
                report.index_sl != elashvili_index(a[0], n))
                throw TheoremViolation(pair.text(),
                                       "meander index " + std::to_string(report.index_sl) +
                                           " != gcd formula " +
                                           std::to_string(elashvili_index(a[0], n)));

            if (kind == FamilyKind::panyushev_odd || kind == FamilyKind::panyushev_even) {
                ComponentCensus census = component_census(build_meander(pair));
                std::vector<int> line(n);
                std::iota(line.begin(), line.end(), 1);
                bool line_path = (n == 1 && census.isolated == std::vector<int>{1}) ||
                                 (census.paths.size() == 1 && census.paths.front() == line);
                if (!line_path)
                    throw TheoremViolation(pair.text(), "path does not follow line order");
            }
            ++check.pairs_checked;
        }
    }
    return check;
}

}  // namespace seaweed
