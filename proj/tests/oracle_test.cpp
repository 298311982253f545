#include <doctest.h>

#include <random>
#include <set>

#include "seaweed/index.hpp"
#include "seaweed/oracle.hpp"

using namespace seaweed;

namespace {

// Flag-preservation check straight from the definition, independent of the
// block arithmetic used by seaweed_shape: E(i,j) preserves the ascending
// flag iff no prefix of the top composition contains j without i, and the
// descending flag iff no suffix of the bottom composition contains j
// without i.
bool preserves_flags(const SeaweedPair& pair, int i, int j) {
    for (int s : pair.top.prefix_sums())
        if (j <= s && i > s) return false;
    for (int s : pair.bottom.prefix_sums())
        if (j > s && i <= s) return false;
    return true;
}

}  // namespace

TEST_CASE("seaweed shape matches the flag definition") {
    using Positions = std::vector<std::pair<int, int>>;

    SeaweedShape borel = seaweed_shape(parse_pair("1,1|2"));
    CHECK(borel.positions == Positions{{1, 1}, {1, 2}, {2, 2}});

    SeaweedShape full = seaweed_shape(parse_pair("4|4"));
    CHECK(full.dim_gl() == 16);

    // exhaustive cross-check against the definition for small n
    std::mt19937 rng(3);
    for (int iter = 0; iter < 60; ++iter) {
        int n = 1 + static_cast<int>(rng() % 7);
        auto random_parts = [&] {
            std::vector<int> parts;
            int left = n;
            while (left > 0) {
                int p = 1 + static_cast<int>(rng() % left);
                parts.push_back(p);
                left -= p;
            }
            return parts;
        };
        SeaweedPair pair{Composition(random_parts()), Composition(random_parts())};
        SeaweedShape shape = seaweed_shape(pair);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                CHECK(static_cast<bool>(shape.is_allowed(i, j)) == preserves_flags(pair, i, j));
        for (int i = 1; i <= n; ++i) CHECK(shape.is_allowed(i, i));
    }

    // the four-block worked example, counted from the definition
    SeaweedPair example = parse_pair("3,1,3,2|4,2,3");
    int by_definition = 0;
    for (int i = 1; i <= 9; ++i)
        for (int j = 1; j <= 9; ++j)
            if (preserves_flags(example, i, j)) ++by_definition;
    CHECK(by_definition == 26);
    CHECK(seaweed_shape(example).dim_gl() == 26);
}

TEST_CASE("maximal parabolic dimension is a^2 + ab + b^2") {
    for (int n = 2; n <= 9; ++n)
        for (int a = 1; a < n; ++a) {
            int b = n - a;
            SeaweedShape shape =
                seaweed_shape(SeaweedPair(Composition({a, b}), Composition({n})));
            CHECK(shape.dim_gl() == a * a + a * b + b * b);
        }
}

TEST_CASE("kirillov form of the gl(2) borel, against a hand computation") {
    // basis E(1,1), E(1,2), E(2,2); nonzero brackets [E11,E12] = E12 and
    // [E12,E22] = E12, so the form is fully determined by phi(E12)
    SeaweedPair pair = parse_pair("1,1|2");
    SeaweedShape shape = seaweed_shape(pair);
    Functional f;
    f.prime = 101;
    f.phi = {7, 13, 42};  // positions (1,1), (1,2), (2,2)
    KirillovForm form = kirillov_form(shape, gl_basis(shape), f);
    fp::Matrix expected = {{0, 13, 0}, {101 - 13, 0, 13}, {0, 101 - 13, 0}};
    CHECK(form.matrix == expected);
    CHECK(fp::rank(expected, 101) == 2);
}

TEST_CASE("form matrices are skew with even rank") {
    std::mt19937 rng(17);
    for (int iter = 0; iter < 25; ++iter) {
        int n = 2 + static_cast<int>(rng() % 5);
        auto random_parts = [&] {
            std::vector<int> parts;
            int left = n;
            while (left > 0) {
                int p = 1 + static_cast<int>(rng() % left);
                parts.push_back(p);
                left -= p;
            }
            return parts;
        };
        SeaweedPair pair{Composition(random_parts()), Composition(random_parts())};
        SeaweedShape shape = seaweed_shape(pair);
        std::int64_t p = 10007;
        Functional f;
        f.prime = p;
        f.phi.resize(shape.positions.size());
        for (auto& v : f.phi) v = static_cast<std::int64_t>(rng() % p);
        KirillovForm form = kirillov_form(shape, gl_basis(shape), f);
        int dim = shape.dim_gl();
        for (int u = 0; u < dim; ++u) {
            CHECK(form.matrix[u][u] == 0);
            for (int v = 0; v < dim; ++v)
                CHECK(form.matrix[u][v] == (p - form.matrix[v][u]) % p);
        }
        CHECK(fp::rank(form.matrix, p) % 2 == 0);
    }
}

TEST_CASE("oracle index on frozen small cases") {
    OracleIndex borel = oracle_index(parse_pair("1,1|2"));
    CHECK(borel.index_gl == 1);
    CHECK(borel.index_sl == 0);
    CHECK(borel.dim_gl == 3);

    OracleIndex a = oracle_index(parse_pair("5,2,2|2,4,3"));
    CHECK(a.index_gl == 3);
    CHECK(a.index_sl == 2);

    OracleIndex b = oracle_index(parse_pair("3,2,2|2,5"));
    CHECK(b.index_gl == 1);
    CHECK(b.index_sl == 0);
}

TEST_CASE("gl-first and direct-sl modes agree") {
    std::mt19937 rng(29);
    for (int iter = 0; iter < 20; ++iter) {
        int n = 2 + static_cast<int>(rng() % 5);
        auto random_parts = [&] {
            std::vector<int> parts;
            int left = n;
            while (left > 0) {
                int p = 1 + static_cast<int>(rng() % left);
                parts.push_back(p);
                left -= p;
            }
            return parts;
        };
        SeaweedPair pair{Composition(random_parts()), Composition(random_parts())};
        OracleOptions direct;
        direct.direct_sl = true;
        CHECK(oracle_index(pair).index_sl == oracle_index(pair, direct).index_sl);
    }
}

TEST_CASE("max rank over trials is nondecreasing in trials") {
    for (const char* text : {"3,2,2|2,5", "5,2,2|2,4,3", "2,3,4|4,5"}) {
        SeaweedPair pair = parse_pair(text);
        int previous = 0;
        for (int trials = 1; trials <= 5; ++trials) {
            OracleOptions options;
            options.trials = trials;
            int rank = oracle_index(pair, options).max_rank;
            CHECK(rank >= previous);
            previous = rank;
        }
    }
}

TEST_CASE("oracle options are validated") {
    SeaweedPair pair = parse_pair("2,1|3");
    OracleOptions bad_trials;
    bad_trials.trials = 0;
    CHECK_THROWS_AS(oracle_index(pair, bad_trials), std::invalid_argument);
    OracleOptions not_prime;
    not_prime.prime = 1000;
    CHECK_THROWS_AS(oracle_index(pair, not_prime), std::invalid_argument);
    OracleOptions small_prime;
    small_prime.prime = 19;  // just above 2 * 3^2
    CHECK_NOTHROW(oracle_index(pair, small_prime));
    SeaweedPair bigger = parse_pair("3,3|6");
    CHECK_THROWS_AS(oracle_index(bigger, small_prime), std::invalid_argument);
}

TEST_CASE("degenerate trials are reported, never silently returned") {
    // a skew form on an odd-dimensional gl realization can never reach full
    // rank, so certifying index -1 must always fail
    OracleOptions opts;
    opts.certified_index_sl = -1;
    CHECK_THROWS_AS(oracle_index(parse_pair("1,1|2"), opts), DegenerateTrials);
    opts.certified_index_sl = 0;
    CHECK_NOTHROW(oracle_index(parse_pair("1,1|2"), opts));
}

TEST_CASE("frobenius functional search") {
    // B_F with F dual to E(1,2) is nondegenerate on the sl(2) borel
    auto f = frobenius_functional(parse_pair("1,1|2"));
    REQUIRE(f.has_value());

    // index 2 > 0: no functional exists at all
    CHECK_FALSE(frobenius_functional(parse_pair("5,2,2|2,4,3")).has_value());

    // gcd(2,5) = 1 guarantees existence
    CHECK(frobenius_functional(parse_pair("2,3|5")).has_value());
}

TEST_CASE("r-matrix of the sl(2) borel has one independent coefficient") {
    SeaweedPair pair = parse_pair("1,1|2");
    auto f = frobenius_functional(pair);
    REQUIRE(f.has_value());
    RMatrix r = build_rmatrix(pair, *f);
    REQUIRE(r.basis.size() == 2);
    int nonzero_upper = 0;
    for (std::size_t u = 0; u < r.basis.size(); ++u)
        for (std::size_t v = u + 1; v < r.basis.size(); ++v)
            if (r.coeff[u][v] != 0) ++nonzero_upper;
    CHECK(nonzero_upper == 1);
    // antisymmetry holds exactly
    CHECK(r.coeff[0][1] == (r.prime - r.coeff[1][0]) % r.prime);

    // non-Frobenius pairs have singular forms for every functional
    SeaweedPair bad = parse_pair("5,2,2|2,4,3");
    SeaweedShape shape = seaweed_shape(bad);
    Functional g;
    g.prime = 2147483647;
    g.phi.assign(shape.positions.size(), 1);
    CHECK_THROWS_AS(build_rmatrix(bad, g), SingularForm);
}

TEST_CASE("r-matrices solve the classical yang-baxter equation") {
    for (const char* text : {"1,1|2", "2,1|3", "1,2|3", "2,3|5"}) {
        SeaweedPair pair = parse_pair(text);
        auto f = frobenius_functional(pair);
        REQUIRE(f.has_value());
        RMatrix r = build_rmatrix(pair, *f);
        CHECK(cybe_residual(r) == 0);
    }

    // test of the test: perturbing one coefficient breaks the identity
    SeaweedPair pair = parse_pair("2,1|3");
    auto f = frobenius_functional(pair);
    REQUIRE(f.has_value());
    RMatrix r = build_rmatrix(pair, *f);
    r.coeff[0][1] = (r.coeff[0][1] + 1) % r.prime;
    CHECK(cybe_residual(r) != 0);
}

TEST_CASE("functional and r-matrix serialize to json") {
    SeaweedPair pair = parse_pair("1,1|2");
    SeaweedShape shape = seaweed_shape(pair);
    auto f = frobenius_functional(pair);
    REQUIRE(f.has_value());
    nlohmann::json jf = to_json(*f, shape);
    CHECK(jf["prime"] == 2147483647);
    CHECK(jf["values"].size() == 3);
    CHECK(jf["values"].contains("(1,2)"));

    RMatrix r = build_rmatrix(pair, *f);
    nlohmann::json jr = to_json(r);
    CHECK(jr["n"] == 2);
    CHECK(jr["basis"] == nlohmann::json::array({"E(1,2)", "H(1)"}));
    CHECK(jr["coefficients"].size() == 2);  // (1,2) and its negative at (2,1)
}

TEST_CASE("finite field helpers") {
    CHECK(fp::is_prime(2147483647));
    CHECK_FALSE(fp::is_prime(2147483646));
    CHECK(fp::mul(fp::inv(12345, 2147483647), 12345, 2147483647) == 1);
    fp::Matrix m = {{1, 2}, {3, 4}};
    auto inv = fp::invert(m, 101);
    REQUIRE(inv.has_value());
    // (1*4 - 2*3) = -2; inverse exists mod 101
    fp::Matrix prod(2, std::vector<std::int64_t>(2, 0));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                prod[i][j] = (prod[i][j] + m[i][k] * (*inv)[k][j]) % 101;
    CHECK(prod == fp::Matrix{{1, 0}, {0, 1}});
    fp::Matrix singular = {{1, 2}, {2, 4}};
    CHECK_FALSE(fp::invert(singular, 101).has_value());
    CHECK(fp::rank(singular, 101) == 1);
}
