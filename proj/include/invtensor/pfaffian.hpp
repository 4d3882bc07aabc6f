#pragma once

// Pfaffian of an antisymmetric matrix and its full polarization as a
// symmetric degree-r invariant tensor for so(2r).

#include <cstdint>
#include <vector>

#include "invtensor/algebra.hpp"
#include "invtensor/tensor.hpp"

namespace invtensor {

// Expansion along the first live index: Pf(A) = sum_j (-1)^j A[i0][j] Pf(A minus {i0,j}).
inline Rat pfaffian(const Mat& a)
{
    const int n = static_cast<int>(a.size());
    if (n % 2 != 0)
        return Rat(0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!is_zero(a[i][j] + a[j][i]))
                throw Error("pfaffian needs an antisymmetric matrix");
    std::vector<int> live(n);
    for (int i = 0; i < n; ++i)
        live[i] = i;
    auto rec = [&](auto&& self, std::vector<int>& idx) -> Rat {
        if (idx.empty())
            return Rat(1);
        int i0 = idx[0];
        Rat total = 0;
        int sign = 1;
        for (std::size_t t = 1; t < idx.size(); ++t) {
            int j = idx[t];
            if (!is_zero(a[i0][j])) {
                std::vector<int> rest;
                rest.reserve(idx.size() - 2);
                for (std::size_t s = 1; s < idx.size(); ++s)
                    if (s != t)
                        rest.push_back(idx[s]);
                Rat sub = self(self, rest);
                if (sign > 0)
                    total += a[i0][j] * sub;
                else
                    total -= a[i0][j] * sub;
            }
            sign = -sign;
        }
        return total;
    };
    return rec(rec, live);
}

namespace detail {

// perfect matchings of {0..n-1} as edge lists, with the matching sign
inline void perfect_matchings(int n, std::vector<std::pair<std::vector<std::pair<int, int>>, int>>& out)
{
    std::vector<std::pair<int, int>> cur;
    std::vector<char> used(n, 0);
    auto rec = [&](auto&& self) -> void {
        int i0 = -1;
        for (int i = 0; i < n; ++i)
            if (!used[i]) {
                i0 = i;
                break;
            }
        if (i0 < 0) {
            // sign of the permutation sending (1,2,...,n) to the edge sequence
            std::vector<int> seq;
            for (auto& [i, j] : cur) {
                seq.push_back(i);
                seq.push_back(j);
            }
            int sign = 1;
            for (std::size_t x = 0; x < seq.size(); ++x)
                for (std::size_t y = x + 1; y < seq.size(); ++y)
                    if (seq[x] > seq[y])
                        sign = -sign;
            out.push_back({ cur, sign });
            return;
        }
        used[i0] = 1;
        for (int j = i0 + 1; j < n; ++j) {
            if (used[j])
                continue;
            used[j] = 1;
            cur.push_back({ i0, j });
            self(self);
            cur.pop_back();
            used[j] = 0;
        }
        used[i0] = 0;
    };
    rec(rec);
}

} // namespace detail

// P[a_1..a_r] with P(X,..,X) = Pf(pi(X) g^{-1}): symmetric, degree r.
inline AdjointTensor polarized_pfaffian_tensor(const ClassicalAlgebra& alg,
                                               std::int64_t budget = kDefaultEntryBudget)
{
    if (alg.spec.family != Family::D)
        throw WrongFamily("the pfaffian invariant lives on family D");
    const int r = alg.spec.rank, n = alg.dimV, d = alg.dimG;

    std::vector<Mat> m(d); // pi(X_a) g^{-1}, antisymmetric
    for (int a = 0; a < d; ++a)
        m[a] = mat_mul(alg.basis[a], *alg.form_inverse);

    std::vector<std::pair<std::vector<std::pair<int, int>>, int>> matchings;
    detail::perfect_matchings(n, matchings);

    AdjointTensor out(r, d, budget);
    Rat inv_rfact(1);
    for (int i = 2; i <= r; ++i)
        inv_rfact /= i;

    // symmetric: evaluate on sorted tuples, copy to the rest
    std::vector<int> idx(r, 0);
    std::vector<int> asg(r);
    auto fill = [&](const std::vector<int>& tuple, const Rat& value) {
        std::vector<int> arr = tuple;
        std::sort(arr.begin(), arr.end());
        do {
            out.at(arr) = value;
        } while (std::next_permutation(arr.begin(), arr.end()));
    };
    auto eval = [&](const std::vector<int>& tuple) -> Rat {
        Rat total = 0;
        for (auto& [edges, msign] : matchings) {
            // sum over which factor feeds which edge
            std::vector<int> perm(r);
            for (int i = 0; i < r; ++i)
                perm[i] = i;
            Rat msum = 0;
            do {
                Rat prod = 1;
                bool dead = false;
                for (int e = 0; e < r; ++e) {
                    const Rat& v = m[tuple[perm[e]]][edges[e].first][edges[e].second];
                    if (is_zero(v)) {
                        dead = true;
                        break;
                    }
                    prod *= v;
                }
                if (!dead)
                    msum += prod;
            } while (std::next_permutation(perm.begin(), perm.end()));
            if (msign > 0)
                total += msum;
            else
                total -= msum;
        }
        return total * inv_rfact;
    };

    // iterate over sorted tuples only
    std::vector<int> tuple(r, 0);
    auto next_sorted = [&]() {
        for (int i = r - 1; i >= 0; --i) {
            if (tuple[i] + 1 < d) {
                int v = tuple[i] + 1;
                for (int j = i; j < r; ++j)
                    tuple[j] = v;
                return true;
            }
        }
        return false;
    };
    do {
        Rat v = eval(tuple);
        if (!is_zero(v))
            fill(tuple, v);
    } while (next_sorted());
    return out;
}

} // namespace invtensor
