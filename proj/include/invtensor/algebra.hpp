#pragma once

// Classical simple Lie algebras in their defining representations, over
// exact rationals.
//
// Basis conventions (fixed; reports depend on them being stable):
//   A_r  (sl(r+1)):  E_ij for i != j in lexicographic (i,j) order, then the
//                    Cartan differences E_ii - E_{i+1,i+1} for i = 1..r.
//   B_r, D_r (so(N), N = 2r+1 / 2r, split form g = ones on the antidiagonal):
//                    M_ij = E_ij - E_{j',i'} with i' = N+1-i, one
//                    representative per +/- pair, lexicographic (i,j) order;
//                    the diagonal members M_ii (i <= r) form a Cartan.
//   C_r  (sp(2r), f = [[0,I],[-I,0]]):  block A: E_ij - E_{r+j,r+i} for all
//                    i,j; block B: E_{i,r+j} + E_{j,r+i} (i < j) and
//                    E_{i,r+i}; block C: transposes of block B.
// All basis matrices are integral with entries in {-1,0,1}, and all are
// simultaneous ad-eigenvectors of the diagonal Cartan elements, which is
// what makes the sparse kernel computations downstream collapse to
// zero-weight blocks.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "invtensor/errors.hpp"
#include "invtensor/linalg.hpp"
#include "invtensor/rational.hpp"

namespace invtensor {

enum class Family { A, B, C, D };

inline char family_letter(Family f)
{
    switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    }
    return '?';
}

inline Family family_from_letter(char c)
{
    switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    }
    throw Error(std::string("unknown family '") + c + "'");
}

struct AlgebraSpec {
    Family family;
    int rank;

    std::string name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }
};

inline void validate_spec(const AlgebraSpec& s)
{
    switch (s.family) {
    case Family::A:
        if (s.rank < 1)
            throw InvalidRank("A_r requires rank >= 1");
        break;
    case Family::B:
        // B_1 is isomorphic to A_1; each isomorphism class appears once.
        if (s.rank < 2)
            throw InvalidRank("B_r requires rank >= 2");
        break;
    case Family::C:
        if (s.rank < 1)
            throw InvalidRank("C_r requires rank >= 1");
        break;
    case Family::D:
        // D_1 and D_2 are not simple.
        if (s.rank < 3)
            throw InvalidRank("D_r requires rank >= 3");
        break;
    }
}

// structure[a][b] is the sparse expansion of [X_a, X_b] in the basis.
using StructureConstants = std::vector<std::vector<std::vector<std::pair<int, Rat>>>>;

struct ClassicalAlgebra {
    AlgebraSpec spec;
    int dimV = 0;
    int dimG = 0;
    std::vector<Mat> basis;            // defining representation, N x N
    StructureConstants structure;
    Mat killing;                       // tr(ad ad), dimG x dimG
    Mat killing_inverse;
    std::optional<Mat> form;           // symmetric g (B/D) or antisymmetric f (C)
    std::optional<Mat> form_inverse;   // the dual form, the matrix inverse
    std::vector<int> exponents;        // empty until with_exponents() fills it

    // weight data in the diagonal Cartan (internal machinery)
    std::vector<int> cartan;                 // basis indices of diagonal elements
    std::vector<std::vector<Rat>> weights;   // per basis element, one per Cartan member
    std::vector<int> generating_set;         // small bracket-generating subset

    Rat structure_constant(int a, int b, int g) const
    {
        for (auto& [gi, v] : structure[a][b])
            if (gi == g)
                return v;
        return Rat(0);
    }
};

namespace detail {

inline Mat unit_matrix(int n, int i, int j)
{
    Mat m = mat_zero(n, n);
    m[i][j] = 1;
    return m;
}

inline std::vector<Mat> basis_A(int r)
{
    int n = r + 1;
    std::vector<Mat> out;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j)
                out.push_back(unit_matrix(n, i, j));
    for (int i = 0; i + 1 < n; ++i) {
        Mat h = mat_zero(n, n);
        h[i][i] = 1;
        h[i + 1][i + 1] = -1;
        out.push_back(h);
    }
    return out;
}

// so(N) in the split form, N = 2r+1 (B) or 2r (D).
inline std::vector<Mat> basis_BD(int n)
{
    auto conj = [n](int i) { return n - 1 - i; }; // 0-based antidiagonal mirror
    std::vector<Mat> out;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (j == conj(i))
                continue; // M_ij vanishes
            int mi = conj(j), mj = conj(i); // the paired slot: M_{j',i'} = -M_{i,j}
            if (std::make_pair(mi, mj) < std::make_pair(i, j))
                continue; // representative already taken
            Mat m = mat_zero(n, n);
            m[i][j] += 1;
            m[mi][mj] -= 1;
            out.push_back(std::move(m));
        }
    return out;
}

inline std::vector<Mat> basis_C(int r)
{
    int n = 2 * r;
    std::vector<Mat> out;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            Mat m = mat_zero(n, n);
            m[i][j] += 1;
            m[r + j][r + i] -= 1;
            out.push_back(std::move(m));
        }
    for (int i = 0; i < r; ++i)
        for (int j = i; j < r; ++j) {
            Mat m = mat_zero(n, n);
            m[i][r + j] += 1;
            if (i != j)
                m[j][r + i] += 1;
            out.push_back(std::move(m));
        }
    for (int i = 0; i < r; ++i)
        for (int j = i; j < r; ++j) {
            Mat m = mat_zero(n, n);
            m[r + i][j] += 1;
            if (i != j)
                m[r + j][i] += 1;
            out.push_back(std::move(m));
        }
    return out;
}

// Exact coordinates of algebra elements in the fixed basis, via a one-time
// pivot factorization of the vectorized basis matrix.
class BasisExpander {
public:
    BasisExpander(const std::vector<Mat>& basis, int n) : n_(n), dim_(static_cast<int>(basis.size()))
    {
        Mat vec = mat_zero(n * n, dim_);
        for (int b = 0; b < dim_; ++b)
            for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                vec[i * n + j][b] = basis[b][i][j];
        // pick dim_ independent rows
        RatSpan span(dim_);
        for (int row = 0; row < n * n && static_cast<int>(pivot_rows_.size()) < dim_; ++row)
            if (span.insert(vec[row]))
                pivot_rows_.push_back(row);
        if (static_cast<int>(pivot_rows_.size()) != dim_)
            throw Error("basis matrices are linearly dependent");
        Mat square(dim_, std::vector<Rat>(dim_));
        for (int k = 0; k < dim_; ++k)
            square[k] = vec[pivot_rows_[k]];
        inv_ = mat_inverse(square);
        basis_ = &basis;
    }

    std::vector<Rat> expand(const Mat& y) const
    {
        std::vector<Rat> rhs(dim_);
        for (int k = 0; k < dim_; ++k)
            rhs[k] = y[pivot_rows_[k] / n_][pivot_rows_[k] % n_];
        std::vector<Rat> x(dim_, Rat(0));
        for (int i = 0; i < dim_; ++i)
            for (int k = 0; k < dim_; ++k)
                if (!is_zero(inv_[i][k]))
                    x[i] += inv_[i][k] * rhs[k];
        // the expansion must reproduce y exactly; anything else means the
        // element left the algebra
        Mat check = mat_zero(n_, n_);
        for (int b = 0; b < dim_; ++b)
            if (!is_zero(x[b]))
                for (int i = 0; i < n_; ++i)
                    for (int j = 0; j < n_; ++j)
                        check[i][j] += x[b] * (*basis_)[b][i][j];
        if (!mat_is_zero(mat_sub(check, y)))
            throw Error("element does not lie in the algebra span");
        return x;
    }

private:
    int n_, dim_;
    std::vector<int> pivot_rows_;
    Mat inv_;
    const std::vector<Mat>* basis_;
};

} // namespace detail

inline ClassicalAlgebra build_algebra(const AlgebraSpec& spec)
{
    validate_spec(spec);
    ClassicalAlgebra alg;
    alg.spec = spec;
    int r = spec.rank;
    switch (spec.family) {
    case Family::A:
        alg.dimV = r + 1;
        alg.basis = detail::basis_A(r);
        break;
    case Family::B:
        alg.dimV = 2 * r + 1;
        alg.basis = detail::basis_BD(alg.dimV);
        break;
    case Family::C:
        alg.dimV = 2 * r;
        alg.basis = detail::basis_C(r);
        break;
    case Family::D:
        alg.dimV = 2 * r;
        alg.basis = detail::basis_BD(alg.dimV);
        break;
    }
    alg.dimG = static_cast<int>(alg.basis.size());
    int n = alg.dimV, d = alg.dimG;

    if (spec.family == Family::B || spec.family == Family::D) {
        Mat g = mat_zero(n, n);
        for (int i = 0; i < n; ++i)
            g[i][n - 1 - i] = 1;
        alg.form = g;
        alg.form_inverse = g; // split symmetric form is an involution
    } else if (spec.family == Family::C) {
        Mat f = mat_zero(n, n);
        for (int i = 0; i < r; ++i) {
            f[i][r + i] = 1;
            f[r + i][i] = -1;
        }
        alg.form = f;
        alg.form_inverse = mat_inverse(f);
    }

    detail::BasisExpander expander(alg.basis, n);
    alg.structure.assign(d, std::vector<std::vector<std::pair<int, Rat>>>(d));
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) {
            std::vector<Rat> c = expander.expand(mat_bracket(alg.basis[a], alg.basis[b]));
            for (int g = 0; g < d; ++g)
                if (!is_zero(c[g])) {
                    alg.structure[a][b].push_back({ g, c[g] });
                    alg.structure[b][a].push_back({ g, -c[g] });
                }
        }

    // Killing form from ad traces (independent of the defining-rep trace
    // form, which killing_ratio later certifies against it):
    //   K_ab = sum_{g,e} c_{a,g}^e c_{b,e}^g
    alg.killing = mat_zero(d, d);
    for (int a = 0; a < d; ++a)
        for (int b = a; b < d; ++b) {
            Rat k = 0;
            for (int g = 0; g < d; ++g)
                for (auto& [e, cav] : alg.structure[a][g])
                    k += cav * alg.structure_constant(b, e, g);
            alg.killing[a][b] = k;
            alg.killing[b][a] = k;
        }
    alg.killing_inverse = mat_inverse(alg.killing);

    // Cartan members are the diagonal basis matrices; every basis element is
    // an ad-eigenvector of each of them.
    for (int b = 0; b < d; ++b) {
        bool diag = true;
        for (int i = 0; i < n && diag; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && !is_zero(alg.basis[b][i][j])) {
                    diag = false;
                    break;
                }
        if (diag)
            alg.cartan.push_back(b);
    }
    if (static_cast<int>(alg.cartan.size()) != r)
        throw Error("Cartan extraction failed for " + spec.name());
    alg.weights.assign(d, std::vector<Rat>(r, Rat(0)));
    for (int b = 0; b < d; ++b)
        for (int hi = 0; hi < r; ++hi) {
            int h = alg.cartan[hi];
            // [X_h, X_b] must be a multiple of X_b
            Rat lambda = 0;
            bool found = false;
            for (auto& [g, v] : alg.structure[h][b]) {
                if (g != b)
                    throw Error("basis element is not a weight vector");
                lambda = v;
                found = true;
            }
            (void)found;
            alg.weights[b][hi] = lambda;
        }

    // Greedy bracket-generating subset: annihilation by it implies
    // annihilation by all of g, since rho([x,y]) = [rho(x), rho(y)].
    {
        RatSpan closure(d);
        std::vector<std::vector<Rat>> members; // coordinates of closure span basis
        auto add_vec = [&](const std::vector<Rat>& v) {
            if (closure.insert(v)) {
                members.push_back(v);
                return true;
            }
            return false;
        };
        auto bracket_coords = [&](const std::vector<Rat>& u, const std::vector<Rat>& v) {
            std::vector<Rat> out(d, Rat(0));
            for (int a = 0; a < d; ++a) {
                if (is_zero(u[a]))
                    continue;
                for (int b = 0; b < d; ++b) {
                    if (is_zero(v[b]))
                        continue;
                    for (auto& [g, c] : alg.structure[a][b])
                        out[g] += u[a] * v[b] * c;
                }
            }
            return out;
        };
        for (int b = 0; b < d && closure.rank() < d; ++b) {
            std::vector<Rat> e(d, Rat(0));
            e[b] = 1;
            if (!closure.contains(e)) {
                alg.generating_set.push_back(b);
                add_vec(e);
                // close under brackets
                std::size_t i = 0;
                while (i < members.size() && closure.rank() < d) {
                    for (std::size_t j = 0; j < members.size() && closure.rank() < d; ++j)
                        add_vec(bracket_coords(members[i], members[j]));
                    ++i;
                }
            }
        }
        if (closure.rank() != d)
            throw Error("generating set extraction failed");
    }

    return alg;
}

// ad(X_a) with entries (ad X_a)_{g,b} = c_{a,b}^g.
inline std::vector<Mat> adjoint_rep(const ClassicalAlgebra& alg)
{
    std::vector<Mat> ads;
    ads.reserve(alg.dimG);
    for (int a = 0; a < alg.dimG; ++a) {
        Mat m = mat_zero(alg.dimG, alg.dimG);
        for (int b = 0; b < alg.dimG; ++b)
            for (auto& [g, v] : alg.structure[a][b])
                m[g][b] = v;
        ads.push_back(std::move(m));
    }
    return ads;
}

// The unique scalar with K_ab = lambda * tr_V(pi(X_a) pi(X_b)), checked on
// every pair.
inline Rat killing_ratio(const ClassicalAlgebra& alg)
{
    Rat lambda = 0;
    bool have = false;
    for (int a = 0; a < alg.dimG; ++a)
        for (int b = 0; b < alg.dimG; ++b) {
            Rat t = mat_trace(mat_mul(alg.basis[a], alg.basis[b]));
            const Rat& k = alg.killing[a][b];
            if (is_zero(t)) {
                if (!is_zero(k))
                    throw NotProportional("Killing form not proportional to trace form at (" + std::to_string(a) + "," + std::to_string(b) + ")");
                continue;
            }
            Rat l = k / t;
            if (!have) {
                lambda = l;
                have = true;
            } else if (l != lambda) {
                throw NotProportional("trace-form ratio is not constant");
            }
        }
    if (!have)
        throw NotProportional("trace form vanishes identically");
    return lambda;
}

} // namespace invtensor
