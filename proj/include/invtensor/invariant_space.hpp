#pragma once

// The brute-force side of the verification: the space of adjoint-invariant
// degree-k tensors is the joint kernel of the basis action on the k-th
// tensor power, computed mod several primes, and compared against the span
// of the realized generating tensors.

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "invtensor/algebra.hpp"
#include "invtensor/generators.hpp"
#include "invtensor/modp.hpp"
#include "invtensor/tensor.hpp"

namespace invtensor {

inline constexpr std::int64_t kDefaultModularBudget = std::int64_t(1) << 24;
inline constexpr std::int64_t kDefaultExactBudget = std::int64_t(1) << 22;

inline std::vector<u64> default_primes() { return { 2147483647ULL, 2147483629ULL }; }
inline u64 escalation_prime() { return 2147483587ULL; }

// The tensors here are multilinear forms on g, so the infinitesimal
// action inserts a bracket into one argument at a time:
// (X_a . T)[b_1..b_k] = sum_i sum_g c_{a,b_i}^g T[b_1.. g ..b_k],
// and T is invariant exactly when this vanishes for every a.
inline AdjointTensor apply_action(const ClassicalAlgebra& alg, int a, const AdjointTensor& t)
{
    const int k = t.degree, d = t.dim;
    AdjointTensor out(k, d);
    std::vector<std::size_t> stride(k);
    if (k > 0) {
        stride[k - 1] = 1;
        for (int i = k - 2; i >= 0; --i)
            stride[i] = stride[i + 1] * d;
    }
    std::vector<int> idx(k, 0);
    for (std::size_t pos = 0; pos < out.entries.size(); ++pos) {
        Rat acc = 0;
        for (int i = 0; i < k; ++i)
            for (auto& [g, v] : alg.structure[a][idx[i]]) {
                const Rat& src = t.entries[pos + (g - idx[i]) * stride[i]];
                if (!is_zero(src))
                    acc += v * src;
            }
        out.entries[pos] = acc;
        for (int j = k - 1; j >= 0; --j) {
            if (++idx[j] < d)
                break;
            idx[j] = 0;
        }
    }
    return out;
}

// Exact invariance under every basis element, not just a generating subset.
inline bool is_invariant(const ClassicalAlgebra& alg, const AdjointTensor& t)
{
    for (int a = 0; a < alg.dimG; ++a)
        if (!tensor_is_zero(apply_action(alg, a, t)))
            return false;
    return true;
}

// The stacked action matrix mod p: one block of dim^k rows per basis
// element. Row (a, beta) holds c_{a,beta_i}^g at the column obtained by
// replacing slot i of beta with g.
inline SparseMatrix action_matrix_modp(const ClassicalAlgebra& alg, int k, u64 p,
                                       std::int64_t budget = kDefaultModularBudget)
{
    const int d = alg.dimG;
    std::int64_t cols = entry_count(d, k, budget);
    if (cols * alg.dimG > budget)
        throw BudgetExceeded("action matrix would have " + std::to_string(cols * alg.dimG) + " rows, over the modular budget");

    // structure constants reduced once per prime
    std::vector<std::vector<std::vector<std::pair<int, u32>>>> structp(d);
    for (int a = 0; a < d; ++a) {
        structp[a].resize(d);
        for (int m = 0; m < d; ++m)
            for (auto& [g, v] : alg.structure[a][m]) {
                u32 vp = static_cast<u32>(rat_mod(v, p));
                if (vp != 0)
                    structp[a][m].push_back({ g, vp });
            }
    }

    std::vector<std::size_t> stride(k);
    stride[k - 1] = 1;
    for (int i = k - 2; i >= 0; --i)
        stride[i] = stride[i + 1] * d;

    SparseMatrix A;
    A.ncols = static_cast<int>(cols);
    std::vector<u64> acc(cols, 0); // only touched entries are ever nonzero
    std::vector<int> touched;
    for (int a = 0; a < d; ++a) {
        std::vector<int> beta(k, 0);
        for (std::int64_t pos = 0; pos < cols; ++pos) {
            touched.clear();
            for (int i = 0; i < k; ++i)
                for (auto& [g, v] : structp[a][beta[i]]) {
                    std::size_t col = pos + (g - beta[i]) * stride[i];
                    if (acc[col] == 0)
                        touched.push_back(static_cast<int>(col));
                    acc[col] = (acc[col] + v) % p;
                }
            std::vector<std::pair<int, u32>> row;
            std::sort(touched.begin(), touched.end());
            touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
            for (int col : touched) {
                if (acc[col] != 0)
                    row.push_back({ col, static_cast<u32>(acc[col]) });
                acc[col] = 0;
            }
            if (!row.empty())
                A.rows.push_back(std::move(row));
            for (int j = k - 1; j >= 0; --j) {
                if (++beta[j] < d)
                    break;
                beta[j] = 0;
            }
        }
    }
    return A;
}

struct KernelResult {
    int dimension = -1;
    std::vector<u64> primes_used;
    bool escalated = false;
};

// dim of the joint kernel, trusted only when independent primes agree.
inline KernelResult kernel_dimension(const ClassicalAlgebra& alg, int k,
                                     std::vector<u64> primes = default_primes(),
                                     std::int64_t budget = kDefaultModularBudget,
                                     RankOptions opts = {})
{
    if (primes.size() < 2)
        throw BadPrime("kernel dimension needs at least two primes for cross-checking");
    std::int64_t cols = entry_count(alg.dimG, k, budget);
    KernelResult res;
    std::vector<int> dims;
    for (u64 p : primes) {
        SparseMatrix A = action_matrix_modp(alg, k, p, budget);
        dims.push_back(static_cast<int>(cols) - sparse_rank_modp(A, p, opts));
        res.primes_used.push_back(p);
    }
    bool agree = true;
    for (int dmm : dims)
        if (dmm != dims[0])
            agree = false;
    if (!agree) {
        u64 extra = escalation_prime();
        SparseMatrix A = action_matrix_modp(alg, k, extra, budget);
        int d3 = static_cast<int>(cols) - sparse_rank_modp(A, extra, opts);
        res.primes_used.push_back(extra);
        res.escalated = true;
        int votes = 0;
        for (int dmm : dims)
            if (dmm == d3)
                ++votes;
        if (votes == 0)
            throw PrimeDisagreement("kernel dimensions disagree across three primes");
        res.dimension = d3;
        return res;
    }
    res.dimension = dims[0];
    return res;
}

// Rank of the generator span, again per prime. A modular rank is a lower
// bound for the rational rank, so agreement with the kernel dimension plus
// exact membership certifies the whole computation over Q.
inline int span_rank_modp(const std::vector<AdjointTensor>& tensors, u64 p)
{
    if (tensors.empty())
        return 0;
    DenseEchelon ech(static_cast<int>(tensors[0].entries.size()), p);
    for (auto& t : tensors) {
        PrimeVector v = to_prime_vector(t, p);
        ech.insert_dense(v.coords);
    }
    return ech.rank();
}

struct VerificationReport {
    AlgebraSpec spec;
    int degree = 0;
    int kernel_dim = -1;
    int generator_count = 0;
    int span_rank = -1;
    std::vector<std::string> membership_failures;
    std::vector<u64> primes;
    bool prime_agreement = false;
    bool certified = false;
    bool used_epsilon_chains = false;
    double elapsed_seconds = 0.0;
};

inline VerificationReport verify_theorem(const ClassicalAlgebra& alg, int degree,
                                         bool include_epsilon_chains = true,
                                         std::vector<u64> primes = default_primes(),
                                         std::int64_t modular_budget = kDefaultModularBudget,
                                         std::int64_t exact_budget = kDefaultExactBudget)
{
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.spec = alg.spec;
    rep.degree = degree;
    rep.used_epsilon_chains = include_epsilon_chains && alg.spec.family == Family::D;

    KernelResult ker = kernel_dimension(alg, degree, primes, modular_budget);
    rep.kernel_dim = ker.dimension;
    rep.primes = ker.primes_used;
    rep.prime_agreement = true; // kernel_dimension throws otherwise

    std::vector<GeneratorDescriptor> descs = enumerate_generators(alg, degree, include_epsilon_chains, exact_budget);
    rep.generator_count = static_cast<int>(descs.size());

    std::vector<AdjointTensor> realized;
    realized.reserve(descs.size());
    for (auto& d : descs) {
        AdjointTensor t = realize(alg, d, exact_budget);
        if (!is_invariant(alg, t))
            rep.membership_failures.push_back(d.id);
        realized.push_back(std::move(t));
    }

    int span = 0;
    for (u64 p : rep.primes)
        span = std::max(span, span_rank_modp(realized, p));
    rep.span_rank = span;

    rep.certified = rep.membership_failures.empty() && rep.span_rank == rep.kernel_dim;
    rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

// ---- orientation-reversing transport for family D ----

// An orthogonal matrix for the split symmetric form with det = -1:
// swapping the two middle coordinates of V fixes g (they pair with each
// other on the antidiagonal) and reverses orientation.
inline Mat orientation_reversing_matrix(const ClassicalAlgebra& alg)
{
    if (alg.spec.family != Family::D)
        throw WrongFamily("orientation reversal is only meaningful for family D");
    const int n = alg.dimV, r = alg.spec.rank;
    Mat R = mat_identity(n);
    R[r - 1][r - 1] = 0;
    R[r][r] = 0;
    R[r - 1][r] = 1;
    R[r][r - 1] = 1;
    return R;
}

// The matrix O with R X_a R^{-1} = sum_b O[b][a] X_b.
inline Mat transport_on_algebra(const ClassicalAlgebra& alg, const Mat& R)
{
    Mat Rinv = mat_inverse(R);
    detail::BasisExpander exp(alg.basis, alg.dimV);
    Mat O = mat_zero(alg.dimG, alg.dimG);
    for (int a = 0; a < alg.dimG; ++a) {
        std::vector<Rat> coeffs = exp.expand(mat_mul(R, mat_mul(alg.basis[a], Rinv)));
        for (int b = 0; b < alg.dimG; ++b)
            O[b][a] = coeffs[b];
    }
    return O;
}

// Pullback along the transport: (O.T)[a_1..a_k] = T(phi(X_{a_1}),...,phi(X_{a_k})).
inline AdjointTensor transport_tensor(const AdjointTensor& t, const Mat& O)
{
    const int k = t.degree, d = t.dim;
    AdjointTensor cur = t;
    for (int slot = 0; slot < k; ++slot) {
        AdjointTensor next(k, d);
        std::vector<std::size_t> stride(k);
        stride[k - 1] = 1;
        for (int i = k - 2; i >= 0; --i)
            stride[i] = stride[i + 1] * d;
        std::vector<int> idx(k, 0);
        for (std::size_t pos = 0; pos < cur.entries.size(); ++pos) {
            if (!is_zero(cur.entries[pos])) {
                int b = idx[slot];
                std::size_t base = pos - b * stride[slot];
                for (int a = 0; a < d; ++a)
                    if (!is_zero(O[b][a]))
                        next.entries[base + a * stride[slot]] += O[b][a] * cur.entries[pos];
            }
            for (int j = k - 1; j >= 0; --j) {
                if (++idx[j] < d)
                    break;
                idx[j] = 0;
            }
        }
        cur = std::move(next);
    }
    return cur;
}

} // namespace invtensor
