#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "seaweed/composition.hpp"
#include "seaweed/errors.hpp"

namespace seaweed {

// Exact arithmetic mod an odd prime < 2^31; products fit in int64.
namespace fp {

std::int64_t mul(std::int64_t a, std::int64_t b, std::int64_t p);
std::int64_t pow(std::int64_t base, std::int64_t exp, std::int64_t p);
std::int64_t inv(std::int64_t a, std::int64_t p);
bool is_prime(std::int64_t p);

using Matrix = std::vector<std::vector<std::int64_t>>;

// Rank by Gaussian elimination; destroys its argument.
int rank(Matrix m, std::int64_t p);

// Gauss-Jordan inverse; nullopt when singular.
std::optional<Matrix> invert(const Matrix& m, std::int64_t p);

}  // namespace fp

// Matrix realization of p(x|y): position (i,j) is allowed iff
// block_x(i) <= block_x(j) and block_y(i) >= block_y(j). All diagonal
// positions are allowed; the sl realization drops one diagonal dimension.
struct SeaweedShape {
    int n = 0;
    std::vector<std::vector<char>> allowed;        // allowed[i-1][j-1]
    std::vector<std::pair<int, int>> positions;    // allowed positions, row-major

    int dim_gl() const { return static_cast<int>(positions.size()); }
    int dim_sl() const { return dim_gl() - 1; }
    bool is_allowed(int i, int j) const { return allowed[i - 1][j - 1]; }
};

SeaweedShape seaweed_shape(const SeaweedPair& pair);

// A functional on the seaweed, represented by one scalar per allowed
// position (the coefficient of that position's dual).
struct Functional {
    std::int64_t prime = 0;
    std::vector<std::int64_t> phi;  // parallel to SeaweedShape::positions
};

// A basis element realized as a sparse n x n matrix with entries mod p.
struct BasisElement {
    std::string label;                                       // "E(i,j)" or "H(k)"
    std::vector<std::pair<std::pair<int, int>, std::int64_t>> entries;
};

// Basis of the gl realization: E(i,j) for every allowed position.
std::vector<BasisElement> gl_basis(const SeaweedShape& shape);

// Basis of the sl realization: off-diagonal E(i,j) plus the traceless
// diagonal elements H(k) = E(k,k) - E(k+1,k+1).
std::vector<BasisElement> sl_basis(const SeaweedShape& shape);

// Matrix of B_F(x,y) = F([x,y]) over the given basis; skew-symmetric.
struct KirillovForm {
    std::int64_t prime = 0;
    std::vector<BasisElement> basis;
    fp::Matrix matrix;
};

KirillovForm kirillov_form(const SeaweedShape& shape, const std::vector<BasisElement>& basis,
                           const Functional& f);

struct OracleOptions {
    int trials = 5;
    std::int64_t prime = 2147483647;
    std::uint64_t seed = 1;
    bool direct_sl = false;  // compute on the traceless basis instead of gl-first
    // When set, throw DegenerateTrials instead of reporting an index above
    // this already-certified value.
    std::optional<int> certified_index_sl;
};

struct OracleIndex {
    int index_gl = 0;
    int index_sl = 0;
    int dim_gl = 0;
    int max_rank = 0;  // best rank over all trials, in the computed realization
};

// Randomized generic-rank protocol: index = dim - max over trials of
// rank(B_F) with F sampled uniformly per basis dual. gl-first by default,
// with the sl value derived by the minus-one normalization.
OracleIndex oracle_index(const SeaweedPair& pair, const OracleOptions& options = {});

// Searches random functionals for one whose form on the sl basis is
// invertible. nullopt after all attempts (for a Frobenius pair this means
// unlucky sampling, not a certificate of non-existence).
std::optional<Functional> frobenius_functional(const SeaweedPair& pair, int attempts = 5,
                                               std::int64_t prime = 2147483647,
                                               std::uint64_t seed = 1);

// r = sum (M^-1)_{uv} x_u (x) x_v over the sl basis; antisymmetric because
// M is skew. Only defined when the form is invertible.
struct RMatrix {
    std::int64_t prime = 0;
    int n = 0;
    std::vector<BasisElement> basis;
    fp::Matrix coeff;  // M^-1
};

RMatrix build_rmatrix(const SeaweedPair& pair, const Functional& f);  // throws SingularForm

// Number of nonzero components of [[r,r]] = [r12,r13]+[r12,r23]+[r13,r23]
// in the triple tensor power of the n x n matrix algebra; 0 certifies a
// solution of the classical Yang-Baxter equation.
long long cybe_residual(const RMatrix& r);

nlohmann::json to_json(const Functional& f, const SeaweedShape& shape);
nlohmann::json to_json(const RMatrix& r);

}  // namespace seaweed
