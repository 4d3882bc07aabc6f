#pragma once

// Dimensions of the symmetric invariants S^d(g)^G and the exponents read
// off from them. Invariant polynomials have weight-zero support (they are
// killed by the Cartan), so only the zero-weight monomials can carry them;
// on those it suffices to intersect the kernels of a bracket-generating
// subset, because vectors killed by x and y are killed by [x,y].

#include <cstdint>
#include <map>
#include <vector>

#include "invtensor/algebra.hpp"
#include "invtensor/invariant_space.hpp"
#include "invtensor/modp.hpp"

namespace invtensor {

namespace detail {

// sorted multisets over {0..d-1} of size deg whose total weight vanishes
inline std::vector<std::vector<int>> zero_weight_monomials(const ClassicalAlgebra& alg, int deg)
{
    const int d = alg.dimG;
    const int rk = static_cast<int>(alg.cartan.size());
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::vector<Rat> wsum(rk, Rat(0));
    auto rec = [&](auto&& self, int from, int remaining) -> void {
        if (remaining == 0) {
            for (int i = 0; i < rk; ++i)
                if (!is_zero(wsum[i]))
                    return;
            out.push_back(cur);
            return;
        }
        for (int m = from; m < d; ++m) {
            cur.push_back(m);
            for (int i = 0; i < rk; ++i)
                wsum[i] += alg.weights[m][i];
            self(self, m, remaining - 1);
            for (int i = 0; i < rk; ++i)
                wsum[i] -= alg.weights[m][i];
            cur.pop_back();
        }
    };
    rec(rec, 0, deg);
    return out;
}

} // namespace detail

// dim S^d(g)^G, computed mod each prime with cross-checking.
inline int symmetric_invariant_dimension(const ClassicalAlgebra& alg, int deg,
                                         std::vector<u64> primes = default_primes(),
                                         std::int64_t budget = kDefaultModularBudget)
{
    if (deg == 0)
        return 1;
    std::vector<std::vector<int>> mono = detail::zero_weight_monomials(alg, deg);
    const int ncols = static_cast<int>(mono.size());
    if (ncols == 0)
        return 0;
    if (static_cast<std::int64_t>(ncols) * alg.dimG * deg > budget)
        throw BudgetExceeded("symmetric action matrix over budget at degree " + std::to_string(deg));

    std::map<std::vector<int>, int> col_of;
    for (int c = 0; c < ncols; ++c)
        col_of[mono[c]] = c;

    std::vector<int> dims;
    for (u64 p : primes) {
        // rows keyed by (acting element, target monomial)
        std::map<std::pair<int, std::vector<int>>, std::map<int, u64>> rows;
        for (int a : alg.generating_set) {
            for (int c = 0; c < ncols; ++c) {
                const std::vector<int>& ms = mono[c];
                for (std::size_t i = 0; i < ms.size(); ++i) {
                    if (i > 0 && ms[i] == ms[i - 1])
                        continue; // one derivative per distinct factor
                    int mult = 0;
                    for (int v : ms)
                        if (v == ms[i])
                            ++mult;
                    for (auto& [g, cval] : alg.structure[a][ms[i]]) {
                        u64 vp = rat_mod(cval * mult, p);
                        if (vp == 0)
                            continue;
                        std::vector<int> target = ms;
                        target[i] = g;
                        std::sort(target.begin(), target.end());
                        auto& row = rows[{ a, std::move(target) }];
                        row[c] = (row[c] + vp) % p;
                    }
                }
            }
        }
        SparseMatrix A;
        A.ncols = ncols;
        for (auto& [key, row] : rows) {
            std::vector<std::pair<int, u32>> r;
            for (auto& [c, v] : row)
                if (v != 0)
                    r.push_back({ c, static_cast<u32>(v) });
            if (!r.empty())
                A.rows.push_back(std::move(r));
        }
        dims.push_back(ncols - sparse_rank_modp(A, p));
    }
    for (int dmm : dims)
        if (dmm != dims[0])
            throw PrimeDisagreement("symmetric invariant dimensions disagree across primes at degree " + std::to_string(deg));
    return dims[0];
}

// Degrees of a free generating set of the invariant ring, found by peeling
// off products of lower-degree generators: a free polynomial algebra on
// generators of degrees d_1..d_r has hilbert series prod 1/(1-t^{d_i}).
inline std::vector<int> invariant_generator_degrees(const ClassicalAlgebra& alg,
                                                    std::vector<u64> primes = default_primes(),
                                                    std::int64_t budget = kDefaultModularBudget)
{
    const int r = alg.spec.rank;
    std::vector<int> degrees;
    int dmax = 2 * r + 2;
    for (int d = 1; d <= dmax && static_cast<int>(degrees.size()) < r; ++d) {
        int inv_dim = symmetric_invariant_dimension(alg, d, primes, budget);
        // monomial count of degree d in the generators found so far
        std::vector<std::int64_t> series(d + 1, 0);
        series[0] = 1;
        for (int g : degrees)
            for (int t = g; t <= d; ++t)
                series[t] += series[t - g];
        std::int64_t fresh = inv_dim - series[d];
        if (fresh < 0)
            throw Error("invariant dimension fell below the generated subring at degree " + std::to_string(d));
        for (std::int64_t i = 0; i < fresh; ++i)
            degrees.push_back(d);
    }
    if (static_cast<int>(degrees.size()) != r)
        throw Error("found " + std::to_string(degrees.size()) + " basic invariants, expected " + std::to_string(r));
    return degrees;
}

inline std::vector<int> compute_exponents(const ClassicalAlgebra& alg,
                                          std::vector<u64> primes = default_primes(),
                                          std::int64_t budget = kDefaultModularBudget)
{
    std::vector<int> degs = invariant_generator_degrees(alg, primes, budget);
    for (auto& d : degs)
        d -= 1;
    return degs;
}

inline ClassicalAlgebra with_exponents(ClassicalAlgebra alg,
                                       std::vector<u64> primes = default_primes(),
                                       std::int64_t budget = kDefaultModularBudget)
{
    alg.exponents = compute_exponents(alg, primes, budget);
    return alg;
}

} // namespace invtensor
