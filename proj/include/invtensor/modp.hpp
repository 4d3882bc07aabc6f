#pragma once

// Rank computation mod p for the sparse matrices this project produces:
// operators whose Cartan blocks are singleton rows and whose residual
// blocks are small. Singleton pivots are eliminated structurally first;
// what remains goes through dense echelon insertion when narrow enough,
// and through a preconditioned Wiedemann minimal-polynomial rank
// (Kaltofen-Saunders) when not.

#include <cstdint>
#include <queue>
#include <utility>
#include <vector>

#include "invtensor/rational.hpp"

namespace invtensor {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

struct SparseMatrix {
    int ncols = 0;
    std::vector<std::vector<std::pair<int, u32>>> rows;
};

// Deterministic generator; all randomness in rank computations is seeded
// from the inputs so reports are byte-identical across runs.
struct SplitMix64 {
    u64 state;
    explicit SplitMix64(u64 seed) : state(seed) {}
    u64 next()
    {
        u64 z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    u64 below(u64 n) { return next() % n; }
};

// Incremental row-echelon insertion over F_p with dense pivot rows.
class DenseEchelon {
public:
    DenseEchelon(int ncols, u64 p) : ncols_(ncols), p_(p), pivot_of_col_(ncols, -1) {}

    // Returns true when the row was independent of the current span.
    bool insert(const std::vector<std::pair<int, u32>>& row)
    {
        buf_.assign(ncols_, 0);
        for (auto& [c, v] : row)
            buf_[c] = (buf_[c] + v) % p_;
        return insert_buffer();
    }

    bool insert_dense(const std::vector<u32>& row)
    {
        buf_.assign(row.begin(), row.end());
        return insert_buffer();
    }

    int rank() const { return static_cast<int>(pivots_.size()); }

private:
    bool insert_buffer()
    {
        for (int c = 0; c < ncols_; ++c) {
            if (buf_[c] == 0)
                continue;
            int pi = pivot_of_col_[c];
            if (pi < 0) {
                u64 inv = inv_mod(buf_[c], p_);
                std::vector<u32> norm(ncols_, 0);
                for (int j = c; j < ncols_; ++j)
                    norm[j] = static_cast<u32>(buf_[j] * inv % p_);
                pivot_of_col_[c] = static_cast<int>(pivots_.size());
                pivots_.push_back(std::move(norm));
                return true;
            }
            u64 f = p_ - buf_[c];
            const std::vector<u32>& pr = pivots_[pi];
            for (int j = c; j < ncols_; ++j)
                buf_[j] = (buf_[j] + f * pr[j]) % p_;
        }
        return false;
    }

    int ncols_;
    u64 p_;
    std::vector<int> pivot_of_col_;
    std::vector<std::vector<u32>> pivots_;
    std::vector<u64> buf_;
};

namespace detail {

// Berlekamp-Massey: length of the shortest LFSR generating `s` mod p,
// plus the connection polynomial C (C[0] = 1).
inline std::vector<u64> berlekamp_massey(const std::vector<u64>& s, u64 p)
{
    std::vector<u64> C = { 1 }, B = { 1 };
    u64 b = 1;
    int L = 0, m = 1;
    for (std::size_t n = 0; n < s.size(); ++n) {
        u64 d = 0;
        for (int i = 0; i <= L; ++i)
            d = (d + C[i] * s[n - i]) % p;
        if (d == 0) {
            ++m;
        } else if (2 * L <= static_cast<int>(n)) {
            std::vector<u64> T = C;
            u64 coef = d * inv_mod(b, p) % p;
            if (C.size() < B.size() + m)
                C.resize(B.size() + m, 0);
            for (std::size_t i = 0; i < B.size(); ++i)
                C[i + m] = (C[i + m] + (p - coef) * B[i]) % p;
            L = static_cast<int>(n) + 1 - L;
            B = T;
            b = d;
            m = 1;
        } else {
            u64 coef = d * inv_mod(b, p) % p;
            if (C.size() < B.size() + m)
                C.resize(B.size() + m, 0);
            for (std::size_t i = 0; i < B.size(); ++i)
                C[i + m] = (C[i + m] + (p - coef) * B[i]) % p;
            ++m;
        }
    }
    C.resize(L + 1, 0);
    return C;
}

} // namespace detail

// Rank of A mod p via the minimal polynomial of B = D1 A^T D2 A D1 with
// random diagonal preconditioners: with high probability the nonzero
// eigenvalues of B are simple, so min_B = x * prod(x - lambda_i) over the
// rank(A) nonzero eigenvalues, and rank = deg(min_B) - 1 (or n when
// min_B(0) != 0). Probabilistic; callers guard with multiple primes.
inline int wiedemann_rank(const SparseMatrix& A, u64 p, u64 seed, int trials = 2)
{
    const int n = A.ncols;
    const int m = static_cast<int>(A.rows.size());
    if (n == 0)
        return 0;

    // column-major copy for the transpose product
    std::vector<std::vector<std::pair<int, u32>>> cols(n);
    for (int r = 0; r < m; ++r)
        for (auto& [c, v] : A.rows[r])
            cols[c].push_back({ r, v });

    int best = 0;
    for (int t = 0; t < trials; ++t) {
        SplitMix64 rng(seed + 0x51ed0000ULL * (t + 1));
        std::vector<u64> d1(n), d2(m), x(n), v(n);
        for (auto& e : d1)
            e = 1 + rng.below(p - 1);
        for (auto& e : d2)
            e = 1 + rng.below(p - 1);
        for (auto& e : x)
            e = rng.below(p);
        for (auto& e : v)
            e = rng.below(p);

        std::vector<u64> s(2 * n + 2);
        std::vector<u64> w(n), u(m);
        for (std::size_t i = 0; i < s.size(); ++i) {
            u64 dot = 0;
            for (int j = 0; j < n; ++j)
                dot = (dot + x[j] * v[j]) % p;
            s[i] = dot;
            if (i + 1 == s.size())
                break;
            // v <- D1 A^T D2 A D1 v
            for (int j = 0; j < n; ++j)
                w[j] = v[j] * d1[j] % p;
            std::fill(u.begin(), u.end(), 0);
            for (int r = 0; r < m; ++r) {
                u64 acc = 0;
                for (auto& [c, val] : A.rows[r])
                    acc = (acc + static_cast<u64>(val) * w[c]) % p;
                u[r] = acc * d2[r] % p;
            }
            std::fill(w.begin(), w.end(), 0);
            for (int c = 0; c < n; ++c) {
                u64 acc = 0;
                for (auto& [r, val] : cols[c])
                    acc = (acc + static_cast<u64>(val) * u[r]) % p;
                w[c] = acc;
            }
            for (int j = 0; j < n; ++j)
                v[j] = w[j] * d1[j] % p;
        }

        std::vector<u64> C = detail::berlekamp_massey(s, p);
        // C is the reversed minimal polynomial of the sequence, so
        // min(0) = C.back(). min = x * prod(x - lambda_i) over the rank
        // simple nonzero eigenvalues w.h.p.; drop the x factor if present.
        int deg = static_cast<int>(C.size()) - 1;
        int r = (deg > 0 && C[deg] == 0) ? deg - 1 : deg;
        if (r > best)
            best = r;
    }
    return best;
}

struct RankOptions {
    int dense_threshold = 1200; // switch to Wiedemann above this many residual columns
    u64 seed = 0x1ead00d5ULL;
};

// Structural singleton elimination followed by a dense or black-box finish.
inline int sparse_rank_modp(const SparseMatrix& A, u64 p, RankOptions opts = {})
{
    const int m = static_cast<int>(A.rows.size());
    std::vector<char> col_alive(A.ncols, 1), row_dead(m, 0);
    std::vector<int> live(m);
    std::vector<std::vector<int>> col_rows(A.ncols);
    for (int r = 0; r < m; ++r) {
        live[r] = static_cast<int>(A.rows[r].size());
        for (auto& [c, v] : A.rows[r])
            col_rows[c].push_back(r);
    }
    std::queue<int> q;
    for (int r = 0; r < m; ++r)
        if (live[r] == 1)
            q.push(r);
    int rank = 0;
    while (!q.empty()) {
        int r = q.front();
        q.pop();
        if (row_dead[r] || live[r] != 1)
            continue;
        int pc = -1;
        for (auto& [c, v] : A.rows[r])
            if (col_alive[c]) {
                pc = c;
                break;
            }
        if (pc < 0)
            continue;
        ++rank;
        row_dead[r] = 1;
        col_alive[pc] = 0;
        for (int rr : col_rows[pc]) {
            if (row_dead[rr])
                continue;
            if (--live[rr] == 1)
                q.push(rr);
            if (live[rr] == 0)
                row_dead[rr] = 1;
        }
    }

    // compact the residual block
    std::vector<int> col_map(A.ncols, -1);
    int nc = 0;
    for (int c = 0; c < A.ncols; ++c)
        if (col_alive[c])
            col_map[c] = nc++;
    if (nc == 0)
        return rank;
    SparseMatrix R;
    R.ncols = nc;
    for (int r = 0; r < m; ++r) {
        if (row_dead[r])
            continue;
        std::vector<std::pair<int, u32>> row;
        for (auto& [c, v] : A.rows[r])
            if (col_alive[c])
                row.push_back({ col_map[c], v });
        if (!row.empty())
            R.rows.push_back(std::move(row));
    }
    if (R.rows.empty())
        return rank;

    if (nc <= opts.dense_threshold) {
        DenseEchelon ech(nc, p);
        for (auto& row : R.rows)
            ech.insert(row);
        return rank + ech.rank();
    }
    return rank + wiedemann_rank(R, p, opts.seed ^ (p * 0x9e37u) ^ nc);
}

} // namespace invtensor
