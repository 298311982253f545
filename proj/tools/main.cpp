#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <map>
#include <string>

#include "seaweed/enumerate.hpp"
#include "seaweed/index.hpp"
#include "seaweed/meander.hpp"
#include "seaweed/oracle.hpp"
#include "seaweed/permutation.hpp"
#include "seaweed/render.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

void print_caret_error(const std::string& text, const seaweed::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cerr << "  " << text << "\n";
    std::cerr << "  " << std::string(std::min(e.position(), text.size()), ' ') << "^\n";
}

const std::map<std::string, seaweed::FamilyKind> kFamilyNames = {
    {"maximal_parabolic", seaweed::FamilyKind::maximal_parabolic},
    {"opposite_maximal", seaweed::FamilyKind::opposite_maximal},
    {"submaximal_parabolic", seaweed::FamilyKind::submaximal_parabolic},
    {"panyushev_odd", seaweed::FamilyKind::panyushev_odd},
    {"panyushev_even", seaweed::FamilyKind::panyushev_even},
};

const char* bool_text(bool b) { return b ? "true" : "false"; }

int cmd_index(const seaweed::SeaweedPair& pair, bool as_json) {
    seaweed::IndexReport report = seaweed::dk_index(pair);
    if (as_json) {
        std::cout << seaweed::to_json(report).dump(2) << "\n";
    } else {
        std::cout << "components=" << report.components << " cycles=" << report.cycles
                  << " index_sl=" << report.index_sl
                  << " frobenius=" << bool_text(report.frobenius) << "\n";
    }
    return kExitOk;
}

int cmd_perm(const seaweed::SeaweedPair& pair, bool verbose, bool as_json) {
    seaweed::MeanderPermutation perm = seaweed::meander_permutation(pair);
    if (as_json) {
        nlohmann::json cycles = nlohmann::json::array();
        for (const auto& c : perm.cycles) cycles.push_back(c);
        std::cout << nlohmann::json{{"pair", pair.text()},
                                    {"cycles", cycles},
                                    {"full_cycle", seaweed::is_full_cycle(perm)}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << seaweed::format_cycles(perm, verbose) << "\n";
    }
    return kExitOk;
}

int cmd_frobenius(const seaweed::SeaweedPair& pair) {
    std::cout << "frobenius=" << bool_text(seaweed::is_frobenius(pair)) << "\n";
    return kExitOk;
}

int cmd_shape(const seaweed::SeaweedPair& pair, bool as_json) {
    seaweed::SeaweedShape shape = seaweed::seaweed_shape(pair);
    if (as_json) {
        nlohmann::json positions = nlohmann::json::array();
        for (auto [i, j] : shape.positions)
            positions.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
        std::cout << nlohmann::json{{"pair", pair.text()},
                                    {"n", shape.n},
                                    {"dim_gl", shape.dim_gl()},
                                    {"dim_sl", shape.dim_sl()},
                                    {"positions", positions}}
                         .dump(2)
                  << "\n";
        return kExitOk;
    }
    for (int i = 1; i <= shape.n; ++i) {
        for (int j = 1; j <= shape.n; ++j) {
            std::cout << (shape.is_allowed(i, j) ? '*' : '.');
            if (j < shape.n) std::cout << ' ';
        }
        std::cout << "\n";
    }
    std::cout << "dim_gl=" << shape.dim_gl() << " dim_sl=" << shape.dim_sl() << "\n";
    return kExitOk;
}

int cmd_oracle(const seaweed::SeaweedPair& pair, const seaweed::OracleOptions& base,
               bool no_check, bool as_json) {
    seaweed::OracleOptions options = base;
    seaweed::IndexReport dk = seaweed::dk_index(pair);
    if (!no_check) options.certified_index_sl = dk.index_sl;

    seaweed::OracleIndex oracle = seaweed::oracle_index(pair, options);
    bool agree = oracle.index_sl == dk.index_sl;
    if (as_json) {
        std::cout << nlohmann::json{{"pair", pair.text()},
                                    {"index_gl", oracle.index_gl},
                                    {"index_sl", oracle.index_sl},
                                    {"dim_gl", oracle.dim_gl},
                                    {"dk_index_sl", dk.index_sl},
                                    {"agree", agree}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "index_gl=" << oracle.index_gl << " index_sl=" << oracle.index_sl
                  << " dim_gl=" << oracle.dim_gl << " dk_index_sl=" << dk.index_sl
                  << " agree=" << bool_text(agree) << "\n";
    }
    if (!agree) {
        std::cerr << "oracle disagrees with the meander index on " << pair.text() << "\n";
        return kExitViolation;
    }
    return kExitOk;
}

int cmd_rmatrix(const seaweed::SeaweedPair& pair, int attempts, std::int64_t prime,
                std::uint64_t seed, bool force, bool as_json) {
    seaweed::IndexReport dk = seaweed::dk_index(pair);
    if (!dk.frobenius) {
        std::cerr << "pair " << pair.text() << " is not Frobenius (index_sl=" << dk.index_sl
                  << "); no nondegenerate functional exists\n";
        return kExitViolation;
    }
    auto f = seaweed::frobenius_functional(pair, attempts, prime, seed);
    if (!f) {
        std::cerr << "no functional found after " << attempts
                  << " attempts (unlucky sampling on a Frobenius pair); retry with a new seed\n";
        return kExitViolation;
    }
    seaweed::RMatrix r = seaweed::build_rmatrix(pair, *f);

    bool checked = pair.n() <= 6 || force;
    long long residual = -1;
    if (checked) residual = seaweed::cybe_residual(r);

    if (as_json) {
        nlohmann::json out{{"pair", pair.text()},
                           {"functional", seaweed::to_json(*f, seaweed::seaweed_shape(pair))},
                           {"rmatrix", seaweed::to_json(r)}};
        if (checked) out["cybe_residual"] = residual;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "functional found, form inverted over prime " << prime << "\n";
        if (checked)
            std::cout << "cybe_residual=" << residual << "\n";
        else
            std::cout << "cybe check skipped for n > 6 (rerun with --force)\n";
    }
    if (checked && residual != 0) {
        std::cerr << "CYBE residual is nonzero\n";
        return kExitViolation;
    }
    return kExitOk;
}

int cmd_sweep(const seaweed::SweepSpec& spec, const std::string& format) {
    if (format == "csv") {
        seaweed::write_csv_header(std::cout);
        seaweed::run_sweep(spec, [](const seaweed::SweepRow& row) {
            seaweed::write_csv_row(std::cout, row);
        });
    } else if (format == "json") {
        bool first = true;
        std::cout << "[\n";
        seaweed::run_sweep(spec, [&first](const seaweed::SweepRow& row) {
            if (!first) std::cout << ",\n";
            first = false;
            std::cout << seaweed::to_json(row).dump();
        });
        std::cout << "\n]\n";
    } else {
        for (int n = spec.n_min; n <= spec.n_max; ++n) {
            seaweed::SweepSpec one = spec;
            one.n_min = one.n_max = n;
            seaweed::SweepSummary summary = seaweed::run_sweep(one, [](const seaweed::SweepRow&) {});
            std::cout << "n=" << n << " pairs=" << summary.pairs
                      << " frobenius=" << summary.frobenius
                      << " violations=" << summary.violations << "\n";
        }
    }
    return kExitOk;
}

int cmd_render(const seaweed::SeaweedPair& pair, bool modified, const std::string& format) {
    seaweed::Meander m = seaweed::build_meander(pair, modified);
    std::cout << (format == "tikz" ? seaweed::to_tikz(m) : seaweed::to_dot(m));
    return kExitOk;
}

int cmd_verify_families(int max_n) {
    for (seaweed::FamilyKind kind :
         {seaweed::FamilyKind::maximal_parabolic, seaweed::FamilyKind::opposite_maximal,
          seaweed::FamilyKind::submaximal_parabolic, seaweed::FamilyKind::panyushev_odd,
          seaweed::FamilyKind::panyushev_even}) {
        seaweed::FamilyCheck check = seaweed::verify_family(kind, max_n);
        std::cout << "family=" << seaweed::to_string(kind) << " pairs=" << check.pairs_checked
                  << " OK\n";
    }
    std::cout << "OK\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"meander-graph index computations for seaweed subalgebras of sl(n)"};
    app.require_subcommand(1);

    std::string pair_text;
    bool as_json = false;
    bool verbose = false;
    bool modified = false;
    bool direct_sl = false;
    bool no_check = false;
    bool force = false;
    std::string format;
    std::string shape_name;
    std::string predicate_name = "all";
    int trials = 5;
    int attempts = 5;
    std::int64_t prime = 2147483647;
    std::uint64_t seed = 1;
    int sweep_n = 0;
    int max_n = 0;
    int threads = 0;

    CLI::App* index_cmd = app.add_subcommand("index", "Dergachev-Kirillov index of a pair");
    index_cmd->add_option("pair", pair_text, "composition pair, e.g. \"5,2,2|2,4,3\"")->required();
    index_cmd->add_flag("--json", as_json, "emit the report as JSON");

    CLI::App* perm_cmd = app.add_subcommand("perm", "meander permutation in cycle notation");
    perm_cmd->add_option("pair", pair_text)->required();
    perm_cmd->add_flag("--verbose", verbose, "print fixed points as 1-cycles");
    perm_cmd->add_flag("--json", as_json);

    CLI::App* frob_cmd = app.add_subcommand("frobenius", "is the pair Frobenius (index 0)?");
    frob_cmd->add_option("pair", pair_text)->required();

    CLI::App* shape_cmd = app.add_subcommand("shape", "matrix realization star diagram");
    shape_cmd->add_option("pair", pair_text)->required();
    shape_cmd->add_flag("--json", as_json);

    CLI::App* oracle_cmd =
        app.add_subcommand("oracle", "rank-based index over a prime field");
    oracle_cmd->add_option("pair", pair_text)->required();
    oracle_cmd->add_option("--trials", trials, "random functionals to sample")->check(CLI::PositiveNumber);
    oracle_cmd->add_option("--prime", prime, "field modulus");
    oracle_cmd->add_option("--seed", seed, "root seed for the trial functionals");
    oracle_cmd->add_flag("--direct-sl", direct_sl, "compute on the traceless basis directly");
    oracle_cmd->add_flag("--no-check", no_check, "skip certification against the meander index");
    oracle_cmd->add_flag("--json", as_json);

    CLI::App* rmatrix_cmd =
        app.add_subcommand("rmatrix", "Frobenius functional, r-matrix, and CYBE check");
    rmatrix_cmd->add_option("pair", pair_text)->required();
    rmatrix_cmd->add_option("--attempts", attempts)->check(CLI::PositiveNumber);
    rmatrix_cmd->add_option("--prime", prime);
    rmatrix_cmd->add_option("--seed", seed);
    rmatrix_cmd->add_flag("--force", force, "run the CYBE check even for n > 6");
    rmatrix_cmd->add_flag("--json", as_json);

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "enumerate composition pairs");
    CLI::Option* sweep_n_opt = sweep_cmd->add_option("--n", sweep_n, "single n to sweep");
    CLI::Option* sweep_max_opt =
        sweep_cmd->add_option("--max-n", max_n, "sweep every n up to this bound");
    sweep_n_opt->excludes(sweep_max_opt);
    sweep_cmd->add_option("--shape", shape_name, "restrict to one family shape")
        ->check(CLI::IsMember([] {
            std::vector<std::string> names;
            for (const auto& [name, kind] : kFamilyNames) names.push_back(name);
            return names;
        }()));
    sweep_cmd->add_option("--predicate", predicate_name)
        ->check(CLI::IsMember({"all", "frobenius", "necessary_pass"}));
    sweep_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json", "summary"}));
    sweep_cmd->add_option("--threads", threads, "worker threads (0 = hardware)");
    sweep_cmd->add_option("--seed", seed, "accepted for reproducible scripting; sweeps are deterministic");

    CLI::App* render_cmd = app.add_subcommand("render", "emit DOT or TikZ for the meander");
    render_cmd->add_option("pair", pair_text)->required();
    render_cmd->add_flag("--modified", modified, "add loops at odd block middles");
    render_cmd->add_option("--format", format)->check(CLI::IsMember({"dot", "tikz"}));

    CLI::App* verify_cmd =
        app.add_subcommand("verify-families", "check the gcd classification theorems");
    verify_cmd->add_option("--max-n", max_n, "largest n to verify")->required()->check(CLI::Range(2, 1000));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(index_cmd)) return cmd_index(seaweed::parse_pair(pair_text), as_json);
        if (app.got_subcommand(perm_cmd))
            return cmd_perm(seaweed::parse_pair(pair_text), verbose, as_json);
        if (app.got_subcommand(frob_cmd)) return cmd_frobenius(seaweed::parse_pair(pair_text));
        if (app.got_subcommand(shape_cmd)) return cmd_shape(seaweed::parse_pair(pair_text), as_json);
        if (app.got_subcommand(oracle_cmd)) {
            seaweed::OracleOptions options;
            options.trials = trials;
            options.prime = prime;
            options.seed = seed;
            options.direct_sl = direct_sl;
            return cmd_oracle(seaweed::parse_pair(pair_text), options, no_check, as_json);
        }
        if (app.got_subcommand(rmatrix_cmd))
            return cmd_rmatrix(seaweed::parse_pair(pair_text), attempts, prime, seed, force,
                               as_json);
        if (app.got_subcommand(sweep_cmd)) {
            if ((sweep_n == 0) == (max_n == 0)) {
                std::cerr << "sweep requires exactly one of --n or --max-n\n";
                return kExitUsage;
            }
            seaweed::SweepSpec spec;
            spec.n_min = sweep_n ? sweep_n : 1;
            spec.n_max = sweep_n ? sweep_n : max_n;
            spec.threads = threads;
            if (!shape_name.empty()) spec.shape_filter = kFamilyNames.at(shape_name);
            if (predicate_name == "frobenius")
                spec.predicate = seaweed::SweepSpec::Predicate::frobenius;
            else if (predicate_name == "necessary_pass")
                spec.predicate = seaweed::SweepSpec::Predicate::necessary_pass;
            return cmd_sweep(spec, format.empty() ? "csv" : format);
        }
        if (app.got_subcommand(render_cmd))
            return cmd_render(seaweed::parse_pair(pair_text), modified,
                              format.empty() ? "dot" : format);
        if (app.got_subcommand(verify_cmd)) return cmd_verify_families(max_n);
    } catch (const seaweed::ParseError& e) {
        print_caret_error(pair_text, e);
        return kExitUsage;
    } catch (const seaweed::TheoremViolation& e) {
        std::cerr << e.what() << "\n";
        return kExitViolation;
    } catch (const seaweed::DegenerateTrials& e) {
        std::cerr << e.what() << " (best rank " << e.best_rank() << ", certified "
                  << e.certified_rank() << "); increase --trials\n";
        return kExitViolation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
