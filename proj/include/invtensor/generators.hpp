#pragma once

// The generating tensors: permuted products of trace tensors, and for D_r
// the Levi-Civita/metric chain tensors.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "invtensor/algebra.hpp"
#include "invtensor/tensor.hpp"

namespace invtensor {

enum class Rep { Defining, Adjoint };

// sparse rows: row i -> list of (col, value)
using SpMat = std::vector<std::vector<std::pair<int, Rat>>>;

inline SpMat to_sparse(const Mat& m)
{
    SpMat s(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j)
            if (!is_zero(m[i][j]))
                s[i].push_back({ static_cast<int>(j), m[i][j] });
    return s;
}

inline SpMat sp_mul(const SpMat& a, const SpMat& b)
{
    SpMat out(a.size());
    std::vector<Rat> acc(b.size(), Rat(0));
    std::vector<int> touched;
    for (std::size_t i = 0; i < a.size(); ++i) {
        touched.clear();
        for (auto& [c, v] : a[i])
            for (auto& [j, w] : b[c]) {
                if (is_zero(acc[j]))
                    touched.push_back(j);
                acc[j] += v * w;
            }
        std::sort(touched.begin(), touched.end());
        for (int j : touched) {
            if (!is_zero(acc[j]))
                out[i].push_back({ j, acc[j] });
            acc[j] = 0;
        }
    }
    return out;
}

inline Rat sp_trace_mul(const SpMat& a, const SpMat& b)
{
    Rat t = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (auto& [c, v] : a[i])
            for (auto& [j, w] : b[c])
                if (j == static_cast<int>(i))
                    t += v * w;
    return t;
}

inline Rat sp_trace(const SpMat& a)
{
    Rat t = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (auto& [c, v] : a[i])
            if (c == static_cast<int>(i))
                t += v;
    return t;
}

inline std::vector<SpMat> rep_matrices(const ClassicalAlgebra& alg, Rep rep)
{
    std::vector<SpMat> out;
    out.reserve(alg.dimG);
    if (rep == Rep::Defining) {
        for (auto& m : alg.basis)
            out.push_back(to_sparse(m));
    } else {
        for (auto& m : adjoint_rep(alg))
            out.push_back(to_sparse(m));
    }
    return out;
}

// T[a_1..a_k] = tr(pi(X_{a_1}) ... pi(X_{a_k})); cyclic by construction.
inline AdjointTensor trace_tensor(const ClassicalAlgebra& alg, int k, Rep rep = Rep::Defining,
                                  std::int64_t budget = kDefaultEntryBudget)
{
    std::vector<SpMat> mats = rep_matrices(alg, rep);
    AdjointTensor out(k, alg.dimG, budget);
    if (k == 1) {
        for (int a = 0; a < alg.dimG; ++a)
            out.entries[a] = sp_trace(mats[a]);
        return out;
    }
    std::size_t pos = 0;
    // DFS over index tuples sharing partial products
    auto rec = [&](auto&& self, const SpMat& partial, int depth) -> void {
        if (depth == k - 1) {
            for (int a = 0; a < alg.dimG; ++a)
                out.entries[pos++] = sp_trace_mul(partial, mats[a]);
            return;
        }
        for (int a = 0; a < alg.dimG; ++a)
            self(self, sp_mul(partial, mats[a]), depth + 1);
    };
    for (int a = 0; a < alg.dimG; ++a)
        rec(rec, mats[a], 1);
    return out;
}

// The End(V)-valued degree-k tensor whose (a,b) slice collects the
// coefficients of matrix entry (a,b) of pi(X_1) ... pi(X_k).
struct MatrixChain {
    int degree = 0;
    int dimV = 0;
    std::vector<std::vector<AdjointTensor>> entry; // [a][b]
};

inline MatrixChain pi_chain(const ClassicalAlgebra& alg, int k, std::int64_t budget = kDefaultEntryBudget)
{
    const int n = alg.dimV, d = alg.dimG;
    entry_count(d, k, budget / std::max(1, n * n));
    MatrixChain chain;
    chain.degree = k;
    chain.dimV = n;
    chain.entry.assign(n, std::vector<AdjointTensor>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            chain.entry[a][b] = AdjointTensor(k, d, budget);
        }
    // iterative build over the degree
    std::vector<std::vector<AdjointTensor>> prev(n, std::vector<AdjointTensor>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            prev[a][b] = AdjointTensor(1, d);
            for (int al = 0; al < d; ++al)
                prev[a][b].entries[al] = alg.basis[al][a][b];
        }
    for (int step = 2; step <= k; ++step) {
        std::vector<std::vector<AdjointTensor>> next(n, std::vector<AdjointTensor>(n));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                AdjointTensor acc(step, d, budget);
                for (int c = 0; c < n; ++c) {
                    // acc[.., al] += prev[a][c][..] * basis[al][c][b]
                    for (int al = 0; al < d; ++al) {
                        const Rat& coeff = alg.basis[al][c][b];
                        if (is_zero(coeff))
                            continue;
                        const auto& src = prev[a][c].entries;
                        for (std::size_t i = 0; i < src.size(); ++i)
                            if (!is_zero(src[i]))
                                acc.entries[i * d + al] += src[i] * coeff;
                    }
                }
                next[a][b] = std::move(acc);
            }
        prev = std::move(next);
    }
    chain.entry = std::move(prev);
    return chain;
}

inline AdjointTensor trace_of_chain(const MatrixChain& chain)
{
    AdjointTensor out = chain.entry[0][0];
    for (int a = 1; a < chain.dimV; ++a)
        out = tensor_add(out, chain.entry[a][a]);
    return out;
}

// eps_{a_1..a_2r} prod_i g^{a_i b_i} [pi^{k_i}]_{b_i}^{a_{r+i}}, with
// eps_{1..2r} = +1 in the fixed basis of V.
inline AdjointTensor epsilon_chain_tensor(const ClassicalAlgebra& alg, const std::vector<int>& chain_lengths,
                                          std::int64_t budget = kDefaultEntryBudget)
{
    if (alg.spec.family != Family::D)
        throw WrongFamily("epsilon chains exist only for family D");
    const int r = alg.spec.rank, n = alg.dimV, d = alg.dimG;
    if (static_cast<int>(chain_lengths.size()) != r)
        throw Error("need exactly rank = " + std::to_string(r) + " chain lengths");
    int k = 0;
    for (int ki : chain_lengths) {
        if (ki < 1)
            throw Error("chain lengths must be positive");
        k += ki;
    }
    AdjointTensor out(k, d, budget);

    const Mat& ginv = *alg.form_inverse;
    SpMat ginv_sp = to_sparse(ginv);
    std::vector<SpMat> defmats = rep_matrices(alg, Rep::Defining);

    // per chain: all block products B * g^{-1}, indexed by the block offset
    std::vector<std::vector<SpMat>> chain_mats(r);
    for (int i = 0; i < r; ++i) {
        int ki = chain_lengths[i];
        std::int64_t blocks = entry_count(d, ki, budget);
        chain_mats[i].reserve(blocks);
        std::vector<int> idx(ki, 0);
        for (std::int64_t off = 0; off < blocks; ++off) {
            SpMat m = defmats[idx[0]];
            for (int t = 1; t < ki; ++t)
                m = sp_mul(m, defmats[idx[t]]);
            chain_mats[i].push_back(sp_mul(m, ginv_sp));
            for (int t = ki - 1; t >= 0; --t) {
                if (++idx[t] < d)
                    break;
                idx[t] = 0;
            }
        }
    }

    // entry value: sum over choices of one nonzero (u_i, v_i) per chain
    // matrix M_i with {v_1..v_r, u_1..u_r} a permutation of 1..2r, weighted
    // by the sign of (i -> v_i, r+i -> u_i).
    std::vector<int> perm(n);
    auto eval = [&](const std::vector<const SpMat*>& ms) {
        Rat total = 0;
        auto rec = [&](auto&& self, int i, std::uint32_t used, const Rat& prod) -> void {
            if (i == r) {
                // sign of perm
                std::uint32_t seen = 0;
                int sign = 1;
                for (int s = 0; s < n; ++s) {
                    if (seen >> s & 1)
                        continue;
                    int len = 0, j = s;
                    while (!(seen >> j & 1)) {
                        seen |= 1u << j;
                        j = perm[j];
                        ++len;
                    }
                    if (len % 2 == 0)
                        sign = -sign;
                }
                if (sign > 0)
                    total += prod;
                else
                    total -= prod;
                return;
            }
            const SpMat& m = *ms[i];
            for (int u = 0; u < n; ++u) {
                if (used >> u & 1)
                    continue;
                for (auto& [v, val] : m[u]) {
                    if (used >> v & 1 || u == v)
                        continue;
                    perm[i] = v;
                    perm[r + i] = u;
                    self(self, i + 1, used | (1u << u) | (1u << v), prod * val);
                }
            }
        };
        rec(rec, 0, 0, Rat(1));
        return total;
    };

    std::vector<std::int64_t> block(r, 0);
    std::vector<const SpMat*> ms(r);
    for (std::size_t pos = 0; pos < out.entries.size(); ++pos) {
        for (int i = 0; i < r; ++i)
            ms[i] = &chain_mats[i][block[i]];
        out.entries[pos] = eval(ms);
        for (int i = r - 1; i >= 0; --i) {
            if (++block[i] < static_cast<std::int64_t>(chain_mats[i].size()))
                break;
            block[i] = 0;
        }
    }
    return out;
}

struct GeneratorDescriptor {
    enum class Kind { TraceProduct, EpsilonChain };
    Kind kind = Kind::TraceProduct;
    std::vector<std::vector<int>> cycles; // TraceProduct: ordered cycles partitioning 0..k-1
    std::vector<int> chain_lengths;       // EpsilonChain: (k_1..k_r)
    Permutation perm = Permutation::identity(0);
    std::string id;

    int degree() const
    {
        if (kind == Kind::TraceProduct) {
            int k = 0;
            for (auto& c : cycles)
                k += static_cast<int>(c.size());
            return k;
        }
        int k = 0;
        for (int ki : chain_lengths)
            k += ki;
        return k;
    }
};

inline AdjointTensor realize(const ClassicalAlgebra& alg, const GeneratorDescriptor& desc,
                             std::int64_t budget = kDefaultEntryBudget)
{
    const int k = desc.degree();
    AdjointTensor assembled;
    if (desc.kind == GeneratorDescriptor::Kind::TraceProduct) {
        std::map<int, AdjointTensor> by_len;
        AdjointTensor prod = scalar_tensor(alg.dimG, Rat(1));
        std::vector<int> positions;
        for (auto& cyc : desc.cycles) {
            int len = static_cast<int>(cyc.size());
            auto it = by_len.find(len);
            if (it == by_len.end())
                it = by_len.emplace(len, trace_tensor(alg, len, Rep::Defining, budget)).first;
            prod = tensor_product(prod, it->second);
            positions.insert(positions.end(), cyc.begin(), cyc.end());
        }
        // spread concatenated slots back to their cycle positions
        Permutation placement = Permutation(positions).inverse();
        assembled = permute(placement, prod);
    } else {
        assembled = epsilon_chain_tensor(alg, desc.chain_lengths, budget);
    }
    if (desc.perm.degree() != k)
        return assembled; // empty perm means identity
    return permute(desc.perm, assembled);
}

namespace detail {

inline std::vector<std::vector<int>> cycles_of(const std::vector<int>& images)
{
    std::vector<std::vector<int>> cycles;
    std::vector<char> seen(images.size(), 0);
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (seen[i])
            continue;
        std::vector<int> cyc;
        int j = static_cast<int>(i);
        while (!seen[j]) {
            seen[j] = 1;
            cyc.push_back(j);
            j = images[j];
        }
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

inline std::string cycles_to_string(const std::vector<std::vector<int>>& cycles)
{
    std::string s;
    for (auto& c : cycles) {
        s += "(";
        for (std::size_t i = 0; i < c.size(); ++i)
            s += (i ? "," : "") + std::to_string(c[i] + 1);
        s += ")";
    }
    return s;
}

inline void compositions(int total, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (parts == 1) {
        if (total >= 1) {
            cur.push_back(total);
            out.push_back(cur);
            cur.pop_back();
        }
        return;
    }
    for (int first = 1; first + (parts - 1) <= total; ++first) {
        cur.push_back(first);
        compositions(total - first, parts - 1, cur, out);
        cur.pop_back();
    }
}

// normalize a tensor to its first nonzero entry being +1; returns false for zero
inline bool sign_normalize(AdjointTensor& t)
{
    for (auto& e : t.entries) {
        if (is_zero(e))
            continue;
        if (sgn(e) < 0)
            t = tensor_scale(t, Rat(-1));
        return true;
    }
    return false;
}

} // namespace detail

// Every ordered-cycle set partition of {1..k} (one representative per
// cyclic rotation of each cycle); these are exactly the permutations of
// S_k via cycle decomposition, so the index-permutation orbit of a product
// of traces is fully absorbed. For family D, additionally every
// epsilon-chain composition, with index permutations deduplicated up to
// the symmetries that only change the realized tensor by a scalar.
inline std::vector<GeneratorDescriptor> enumerate_generators(const ClassicalAlgebra& alg, int k,
                                                             bool include_epsilon_chains = true,
                                                             std::int64_t budget = kDefaultEntryBudget)
{
    if (k < 1)
        throw Error("degree must be >= 1");
    if (k > 8)
        throw BudgetExceeded("generator enumeration beyond degree 8 is not supported");
    std::vector<GeneratorDescriptor> out;
    detail::for_each_permutation(k, [&](const std::vector<int>& im) {
        GeneratorDescriptor d;
        d.kind = GeneratorDescriptor::Kind::TraceProduct;
        d.cycles = detail::cycles_of(im);
        d.perm = Permutation::identity(k);
        d.id = "trace" + detail::cycles_to_string(d.cycles);
        out.push_back(std::move(d));
    });
    if (alg.spec.family == Family::D && include_epsilon_chains && k >= alg.spec.rank) {
        std::vector<std::vector<int>> comps;
        std::vector<int> cur;
        detail::compositions(k, alg.spec.rank, cur, comps);
        std::vector<AdjointTensor> kept;
        for (auto& comp : comps) {
            AdjointTensor base = epsilon_chain_tensor(alg, comp, budget);
            detail::for_each_permutation(k, [&](const std::vector<int>& im) {
                Permutation sigma(im);
                AdjointTensor t = permute(sigma, base);
                if (!detail::sign_normalize(t))
                    return; // degenerate chain
                for (auto& prev : kept)
                    if (prev == t)
                        return;
                kept.push_back(std::move(t));
                GeneratorDescriptor d;
                d.kind = GeneratorDescriptor::Kind::EpsilonChain;
                d.chain_lengths = comp;
                d.perm = sigma;
                std::string cs;
                for (std::size_t i = 0; i < comp.size(); ++i)
                    cs += (i ? "," : "") + std::to_string(comp[i]);
                std::string ps;
                for (std::size_t i = 0; i < im.size(); ++i)
                    ps += (i ? "," : "") + std::to_string(im[i] + 1);
                d.id = "eps[" + cs + "]perm(" + ps + ")";
                out.push_back(std::move(d));
            });
        }
    }
    return out;
}

// Fast exact check that the full symmetrization of the degree-k trace
// tensor vanishes, done on sorted index multisets without materializing
// the k!-fold sum. Requires an integral representation (ours are).
inline bool symmetrized_trace_is_zero(const ClassicalAlgebra& alg, int k, Rep rep)
{
    using IMat = std::vector<std::vector<std::pair<int, std::int64_t>>>;
    std::vector<SpMat> mats = rep_matrices(alg, rep);
    std::vector<IMat> imats(mats.size());
    for (std::size_t a = 0; a < mats.size(); ++a) {
        imats[a].resize(mats[a].size());
        for (std::size_t i = 0; i < mats[a].size(); ++i)
            for (auto& [j, v] : mats[a][i]) {
                if (v.get_den() != 1)
                    throw Error("representation matrices are not integral");
                imats[a][i].push_back({ j, v.get_num().get_si() });
            }
    }
    const int nrows = static_cast<int>(imats[0].size());

    auto trace_of = [&](const std::vector<int>& tuple) {
        std::int64_t total = 0;
        for (int start = 0; start < nrows; ++start) {
            // closed walks start -> ... -> start through the tuple's matrices
            auto walk = [&](auto&& self, int row, int depth, std::int64_t prod) -> void {
                if (depth == static_cast<int>(tuple.size())) {
                    if (row == start)
                        total += prod;
                    return;
                }
                for (auto& [j, v] : imats[tuple[depth]][row])
                    self(self, j, depth + 1, prod * v);
            };
            walk(walk, start, 0, 1);
        }
        return total;
    };

    const int d = alg.dimG;
    std::vector<int> tuple(k, 0);
    // enumerate sorted tuples (multisets)
    auto next_multiset = [&]() {
        for (int i = k - 1; i >= 0; --i) {
            if (tuple[i] + 1 < d) {
                int v = tuple[i] + 1;
                for (int j = i; j < k; ++j)
                    tuple[j] = v;
                return true;
            }
        }
        return false;
    };
    do {
        std::int64_t sum = 0;
        std::vector<int> arr = tuple;
        do {
            sum += trace_of(arr);
        } while (std::next_permutation(arr.begin(), arr.end()));
        if (sum != 0)
            return false;
    } while (next_multiset());
    return true;
}

} // namespace invtensor
