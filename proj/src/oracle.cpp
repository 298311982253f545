#include "seaweed/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <random>

namespace seaweed {

namespace fp {

std::int64_t mul(std::int64_t a, std::int64_t b, std::int64_t p) { return a * b % p; }

std::int64_t pow(std::int64_t base, std::int64_t exp, std::int64_t p) {
    std::int64_t acc = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1) acc = mul(acc, base, p);
        base = mul(base, base, p);
        exp >>= 1;
    }
    return acc;
}

std::int64_t inv(std::int64_t a, std::int64_t p) { return pow(a, p - 2, p); }

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

int rank(Matrix m, std::int64_t p) {
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[r], m[pivot]);
        std::int64_t scale = inv(m[r][c], p);
        for (int j = c; j < cols; ++j) m[r][j] = mul(m[r][j], scale, p);
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            std::int64_t f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] = (m[i][j] - mul(f, m[r][j], p) % p + p) % p;
        }
        ++r;
    }
    return r;
}

std::optional<Matrix> invert(const Matrix& m, std::int64_t p) {
    int dim = static_cast<int>(m.size());
    Matrix work = m;
    Matrix out(dim, std::vector<std::int64_t>(dim, 0));
    for (int i = 0; i < dim; ++i) out[i][i] = 1 % p;
    for (int c = 0; c < dim; ++c) {
        int pivot = -1;
        for (int i = c; i < dim; ++i)
            if (work[i][c] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) return std::nullopt;
        std::swap(work[c], work[pivot]);
        std::swap(out[c], out[pivot]);
        std::int64_t scale = inv(work[c][c], p);
        for (int j = 0; j < dim; ++j) {
            work[c][j] = mul(work[c][j], scale, p);
            out[c][j] = mul(out[c][j], scale, p);
        }
        for (int i = 0; i < dim; ++i) {
            if (i == c || work[i][c] == 0) continue;
            std::int64_t f = work[i][c];
            for (int j = 0; j < dim; ++j) {
                work[i][j] = (work[i][j] - mul(f, work[c][j], p) % p + p) % p;
                out[i][j] = (out[i][j] - mul(f, out[c][j], p) % p + p) % p;
            }
        }
    }
    return out;
}

}  // namespace fp

SeaweedShape seaweed_shape(const SeaweedPair& pair) {
    int n = pair.n();
    SeaweedShape shape;
    shape.n = n;
    shape.allowed.assign(n, std::vector<char>(n, 0));
    std::vector<int> bx(n + 1), by(n + 1);
    for (int v = 1; v <= n; ++v) {
        bx[v] = pair.top.block_of(v);
        by[v] = pair.bottom.block_of(v);
    }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (bx[i] <= bx[j] && by[i] >= by[j]) {
                shape.allowed[i - 1][j - 1] = 1;
                shape.positions.emplace_back(i, j);
            }
    return shape;
}

std::vector<BasisElement> gl_basis(const SeaweedShape& shape) {
    std::vector<BasisElement> basis;
    basis.reserve(shape.positions.size());
    for (auto [i, j] : shape.positions) {
        BasisElement e;
        e.label = "E(" + std::to_string(i) + "," + std::to_string(j) + ")";
        e.entries = {{{i, j}, 1}};
        basis.push_back(std::move(e));
    }
    return basis;
}

std::vector<BasisElement> sl_basis(const SeaweedShape& shape) {
    std::vector<BasisElement> basis;
    for (auto [i, j] : shape.positions) {
        if (i == j) continue;
        BasisElement e;
        e.label = "E(" + std::to_string(i) + "," + std::to_string(j) + ")";
        e.entries = {{{i, j}, 1}};
        basis.push_back(std::move(e));
    }
    for (int k = 1; k < shape.n; ++k) {
        BasisElement h;
        h.label = "H(" + std::to_string(k) + ")";
        h.entries = {{{k, k}, 1}, {{k + 1, k + 1}, -1}};
        basis.push_back(std::move(h));
    }
    return basis;
}

namespace {

using SparseMat = std::map<std::pair<int, int>, std::int64_t>;

SparseMat commutator(const BasisElement& a, const BasisElement& b, std::int64_t p) {
    SparseMat out;
    auto accumulate = [&](int i, int j, std::int64_t v) {
        std::int64_t& slot = out[{i, j}];
        slot = ((slot + v) % p + p) % p;
        if (slot == 0) out.erase({i, j});
    };
    for (const auto& [apos, av] : a.entries)
        for (const auto& [bpos, bv] : b.entries) {
            if (apos.second == bpos.first) accumulate(apos.first, bpos.second, av * bv % p);
            if (bpos.second == apos.first) accumulate(bpos.first, apos.second, -(av * bv % p));
        }
    return out;
}

// Dense lookup of the functional's coefficients by matrix position.
fp::Matrix functional_table(const SeaweedShape& shape, const Functional& f) {
    fp::Matrix phi(shape.n, std::vector<std::int64_t>(shape.n, 0));
    for (std::size_t k = 0; k < shape.positions.size(); ++k) {
        auto [i, j] = shape.positions[k];
        phi[i - 1][j - 1] = ((f.phi[k] % f.prime) + f.prime) % f.prime;
    }
    return phi;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

Functional sample_functional(const SeaweedShape& shape, std::int64_t prime, std::uint64_t seed) {
    Functional f;
    f.prime = prime;
    f.phi.resize(shape.positions.size());
    std::mt19937_64 rng(seed);
    for (auto& v : f.phi) v = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(prime));
    return f;
}

void validate_prime(std::int64_t prime, int n) {
    static std::atomic<std::int64_t> last_checked{0};
    if (prime != last_checked.load()) {
        if (!fp::is_prime(prime)) throw std::invalid_argument("modulus is not prime");
        last_checked.store(prime);
    }
    if (prime <= 2LL * n * n)
        throw std::invalid_argument("prime must exceed 2*n^2");
}

}  // namespace

KirillovForm kirillov_form(const SeaweedShape& shape, const std::vector<BasisElement>& basis,
                           const Functional& f) {
    KirillovForm form;
    form.prime = f.prime;
    form.basis = basis;
    int m = static_cast<int>(basis.size());
    form.matrix.assign(m, std::vector<std::int64_t>(m, 0));
    fp::Matrix phi = functional_table(shape, f);
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) {
            std::int64_t val = 0;
            for (const auto& [pos, c] : commutator(basis[u], basis[v], f.prime))
                val = (val + fp::mul(c, phi[pos.first - 1][pos.second - 1], f.prime)) % f.prime;
            form.matrix[u][v] = val;
            form.matrix[v][u] = (f.prime - val) % f.prime;
        }
    return form;
}

OracleIndex oracle_index(const SeaweedPair& pair, const OracleOptions& options) {
    if (options.trials < 1) throw std::invalid_argument("trials must be >= 1");
    validate_prime(options.prime, pair.n());

    SeaweedShape shape = seaweed_shape(pair);
    std::vector<BasisElement> basis = options.direct_sl ? sl_basis(shape) : gl_basis(shape);
    int dim = static_cast<int>(basis.size());

    int max_rank = 0;
    for (int trial = 0; trial < options.trials; ++trial) {
        std::uint64_t trial_seed = splitmix64(options.seed ^ splitmix64(trial + 1));
        Functional f = sample_functional(shape, options.prime, trial_seed);
        KirillovForm form = kirillov_form(shape, basis, f);
        max_rank = std::max(max_rank, fp::rank(std::move(form.matrix), options.prime));
        if (max_rank == dim) break;  // cannot improve further
    }

    OracleIndex result;
    result.dim_gl = shape.dim_gl();
    result.max_rank = max_rank;
    if (options.direct_sl) {
        result.index_sl = shape.dim_sl() - max_rank;
        result.index_gl = result.index_sl + 1;
    } else {
        result.index_gl = shape.dim_gl() - max_rank;
        result.index_sl = result.index_gl - 1;
    }

    if (options.certified_index_sl && result.index_sl > *options.certified_index_sl) {
        int certified_rank = options.direct_sl
                                 ? shape.dim_sl() - *options.certified_index_sl
                                 : shape.dim_gl() - 1 - *options.certified_index_sl;
        throw DegenerateTrials("all sampled functionals fell short of the certified rank",
                               max_rank, certified_rank);
    }
    return result;
}

std::optional<Functional> frobenius_functional(const SeaweedPair& pair, int attempts,
                                               std::int64_t prime, std::uint64_t seed) {
    if (attempts < 1) throw std::invalid_argument("attempts must be >= 1");
    validate_prime(prime, pair.n());

    SeaweedShape shape = seaweed_shape(pair);
    std::vector<BasisElement> basis = sl_basis(shape);
    int dim = static_cast<int>(basis.size());
    for (int attempt = 0; attempt < attempts; ++attempt) {
        std::uint64_t attempt_seed = splitmix64(seed ^ splitmix64(attempt + 1));
        Functional f = sample_functional(shape, prime, attempt_seed);
        KirillovForm form = kirillov_form(shape, basis, f);
        if (fp::rank(std::move(form.matrix), prime) == dim) return f;
    }
    return std::nullopt;
}

RMatrix build_rmatrix(const SeaweedPair& pair, const Functional& f) {
    SeaweedShape shape = seaweed_shape(pair);
    std::vector<BasisElement> basis = sl_basis(shape);
    KirillovForm form = kirillov_form(shape, basis, f);
    auto inverse = fp::invert(form.matrix, f.prime);
    if (!inverse) throw SingularForm("Kirillov form is singular for this functional");
    RMatrix r;
    r.prime = f.prime;
    r.n = shape.n;
    r.basis = std::move(basis);
    r.coeff = std::move(*inverse);
    return r;
}

long long cybe_residual(const RMatrix& r) {
    const int n = r.n;
    const std::int64_t p = r.prime;
    const int m = static_cast<int>(r.basis.size());
    const int nn = n * n;

    // Contractions of the coefficient matrix against the basis, as dense
    // n x n matrices: y[u] = sum_v coeff[u][v] x_v, z[v] = sum_u coeff[u][v] x_u.
    auto contract = [&](bool by_row) {
        std::vector<fp::Matrix> out(m, fp::Matrix(n, std::vector<std::int64_t>(n, 0)));
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) {
                std::int64_t c = by_row ? r.coeff[a][b] : r.coeff[b][a];
                if (c == 0) continue;
                for (const auto& [pos, v] : r.basis[b].entries) {
                    std::int64_t& slot = out[a][pos.first - 1][pos.second - 1];
                    slot = ((slot + c * v) % p + p) % p;
                }
            }
        return out;
    };
    std::vector<fp::Matrix> y = contract(true);
    std::vector<fp::Matrix> z = contract(false);

    auto nonzeros = [&](const fp::Matrix& mat) {
        std::vector<std::pair<int, std::int64_t>> out;  // (i*n+j, value)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (mat[i][j] != 0) out.emplace_back(i * n + j, mat[i][j]);
        return out;
    };
    std::vector<std::vector<std::pair<int, std::int64_t>>> ynz(m), znz(m);
    for (int a = 0; a < m; ++a) {
        ynz[a] = nonzeros(y[a]);
        znz[a] = nonzeros(z[a]);
    }

    std::vector<SparseMat> comm(static_cast<std::size_t>(m) * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) comm[a * m + b] = commutator(r.basis[a], r.basis[b], p);

    std::vector<std::int64_t> tensor(static_cast<std::size_t>(nn) * nn * nn, 0);
    auto add_term = [&](const SparseMat& first, const std::vector<std::pair<int, std::int64_t>>& second,
                        const std::vector<std::pair<int, std::int64_t>>& third, int slot) {
        // slot selects which tensor factor carries the commutator (0, 1, or 2).
        for (const auto& [pos, cv] : first) {
            int cidx = (pos.first - 1) * n + (pos.second - 1);
            for (const auto& [i2, v2] : second) {
                std::int64_t partial = fp::mul(cv, v2, p);
                for (const auto& [i3, v3] : third) {
                    int a = 0, b = 0, c = 0;
                    if (slot == 0) {
                        a = cidx; b = i2; c = i3;
                    } else if (slot == 1) {
                        a = i2; b = cidx; c = i3;
                    } else {
                        a = i2; b = i3; c = cidx;
                    }
                    std::size_t idx = (static_cast<std::size_t>(a) * nn + b) * nn + c;
                    tensor[idx] = (tensor[idx] + fp::mul(partial, v3, p)) % p;
                }
            }
        }
    };

    for (int u = 0; u < m; ++u)
        for (int s = 0; s < m; ++s) {
            const SparseMat& c_us = comm[u * m + s];
            if (c_us.empty()) continue;
            add_term(c_us, ynz[u], ynz[s], 0);  // [r12, r13]
            add_term(c_us, znz[u], ynz[s], 1);  // [r12, r23]
            add_term(c_us, znz[u], znz[s], 2);  // [r13, r23]
        }

    long long count = 0;
    for (std::int64_t v : tensor)
        if (v != 0) ++count;
    return count;
}

nlohmann::json to_json(const Functional& f, const SeaweedShape& shape) {
    nlohmann::json values = nlohmann::json::object();
    for (std::size_t k = 0; k < shape.positions.size(); ++k) {
        auto [i, j] = shape.positions[k];
        values["(" + std::to_string(i) + "," + std::to_string(j) + ")"] = f.phi[k];
    }
    return nlohmann::json{{"prime", f.prime}, {"values", values}};
}

nlohmann::json to_json(const RMatrix& r) {
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& e : r.basis) basis.push_back(e.label);
    nlohmann::json coeff = nlohmann::json::object();
    int m = static_cast<int>(r.basis.size());
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < m; ++v)
            if (r.coeff[u][v] != 0)
                coeff["(" + std::to_string(u + 1) + "," + std::to_string(v + 1) + ")"] =
                    r.coeff[u][v];
    return nlohmann::json{{"prime", r.prime}, {"n", r.n}, {"basis", basis},
                          {"coefficients", coeff}};
}

}  // namespace seaweed
