#pragma once

// Dense exact-rational tensors over adjoint indices, with the symmetric
// group acting by index permutation.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "invtensor/errors.hpp"
#include "invtensor/rational.hpp"

namespace invtensor {

inline constexpr std::int64_t kDefaultEntryBudget = std::int64_t(1) << 27;

inline std::int64_t entry_count(int dim, int degree, std::int64_t budget = kDefaultEntryBudget)
{
    std::int64_t n = 1;
    for (int i = 0; i < degree; ++i) {
        n *= dim;
        if (n > budget)
            throw BudgetExceeded("dim^degree = " + std::to_string(dim) + "^" + std::to_string(degree) + " exceeds the entry budget " + std::to_string(budget));
    }
    return n;
}

struct AdjointTensor {
    int degree = 0;
    int dim = 0;
    std::vector<Rat> entries; // row-major, first index most significant

    AdjointTensor() = default;
    AdjointTensor(int degree_, int dim_, std::int64_t budget = kDefaultEntryBudget)
        : degree(degree_), dim(dim_), entries(static_cast<std::size_t>(entry_count(dim_, degree_, budget)), Rat(0))
    {
    }

    Rat& at(const std::vector<int>& idx)
    {
        return entries[offset(idx)];
    }
    const Rat& at(const std::vector<int>& idx) const
    {
        return entries[offset(idx)];
    }
    std::size_t offset(const std::vector<int>& idx) const
    {
        std::size_t o = 0;
        for (int i : idx)
            o = o * dim + static_cast<std::size_t>(i);
        return o;
    }

    bool operator==(const AdjointTensor& o) const
    {
        return degree == o.degree && dim == o.dim && entries == o.entries;
    }
};

// sigma in S_k, stored as 0-based images: sigma maps slot i to images[i].
struct Permutation {
    std::vector<int> images;

    explicit Permutation(std::vector<int> im) : images(std::move(im))
    {
        std::vector<char> seen(images.size(), 0);
        for (int v : images) {
            if (v < 0 || v >= static_cast<int>(images.size()) || seen[v])
                throw Error("permutation images are not a bijection");
            seen[v] = 1;
        }
    }
    static Permutation identity(int k)
    {
        std::vector<int> im(k);
        std::iota(im.begin(), im.end(), 0);
        return Permutation(std::move(im));
    }
    int degree() const { return static_cast<int>(images.size()); }

    Permutation inverse() const
    {
        std::vector<int> im(images.size());
        for (std::size_t i = 0; i < images.size(); ++i)
            im[images[i]] = static_cast<int>(i);
        return Permutation(std::move(im));
    }
    // composition acting left to right on slots: (*this after other)
    Permutation after(const Permutation& other) const
    {
        std::vector<int> im(images.size());
        for (std::size_t i = 0; i < images.size(); ++i)
            im[i] = images[other.images[i]];
        return Permutation(std::move(im));
    }
    int sign() const
    {
        std::vector<char> seen(images.size(), 0);
        int s = 1;
        for (std::size_t i = 0; i < images.size(); ++i) {
            if (seen[i])
                continue;
            int len = 0, j = static_cast<int>(i);
            while (!seen[j]) {
                seen[j] = 1;
                j = images[j];
                ++len;
            }
            if (len % 2 == 0)
                s = -s;
        }
        return s;
    }
};

// (sigma.T)(X_1,...,X_k) = T(X_{sigma^-1(1)},...,X_{sigma^-1(k)})
inline AdjointTensor permute(const Permutation& sigma, const AdjointTensor& t)
{
    if (sigma.degree() != t.degree)
        throw DegreeMismatch("permutation degree " + std::to_string(sigma.degree()) + " vs tensor degree " + std::to_string(t.degree));
    const int k = t.degree, n = t.dim;
    AdjointTensor out(k, n);
    if (k == 0) {
        out.entries = t.entries;
        return out;
    }
    // out[a_1..a_k] = t[b_1..b_k] with b_m = a_{sigma^-1(m)}, i.e. slot j of
    // `out` contributes with the stride of slot sigma(j) in `t`.
    std::vector<std::size_t> stride(k);
    stride[k - 1] = 1;
    for (int i = k - 2; i >= 0; --i)
        stride[i] = stride[i + 1] * n;
    std::vector<std::size_t> eff(k);
    for (int j = 0; j < k; ++j)
        eff[j] = stride[sigma.images[j]];

    std::vector<int> idx(k, 0);
    std::size_t src = 0;
    for (std::size_t dst = 0; dst < out.entries.size(); ++dst) {
        out.entries[dst] = t.entries[src];
        for (int j = k - 1; j >= 0; --j) {
            if (++idx[j] < n) {
                src += eff[j];
                break;
            }
            idx[j] = 0;
            src -= eff[j] * (n - 1);
        }
    }
    return out;
}

namespace detail {
template <typename F>
inline void for_each_permutation(int k, F&& f)
{
    std::vector<int> im(k);
    std::iota(im.begin(), im.end(), 0);
    do {
        f(im);
    } while (std::next_permutation(im.begin(), im.end()));
}
} // namespace detail

// (1/k!) sum over all permutations; idempotent by construction.
inline AdjointTensor symmetrize(const AdjointTensor& t)
{
    const int k = t.degree;
    if (k > 8)
        throw BudgetExceeded("symmetrize: degree " + std::to_string(k) + " means " + std::to_string(k) + "! permutation passes");
    AdjointTensor acc(k, t.dim);
    std::int64_t count = 0;
    detail::for_each_permutation(k, [&](const std::vector<int>& im) {
        AdjointTensor p = permute(Permutation(im), t);
        for (std::size_t i = 0; i < acc.entries.size(); ++i)
            acc.entries[i] += p.entries[i];
        ++count;
    });
    Rat inv(1, static_cast<unsigned long>(count));
    for (auto& e : acc.entries)
        e *= inv;
    return acc;
}

inline AdjointTensor tensor_product(const AdjointTensor& s, const AdjointTensor& t)
{
    if (s.dim != t.dim && s.degree != 0 && t.degree != 0)
        throw DimMismatch("tensor_product: dim " + std::to_string(s.dim) + " vs " + std::to_string(t.dim));
    int dim = s.degree ? s.dim : t.dim;
    AdjointTensor out(s.degree + t.degree, dim);
    for (std::size_t i = 0; i < s.entries.size(); ++i) {
        if (is_zero(s.entries[i]))
            continue;
        std::size_t base = i * t.entries.size();
        for (std::size_t j = 0; j < t.entries.size(); ++j)
            if (!is_zero(t.entries[j]))
                out.entries[base + j] = s.entries[i] * t.entries[j];
    }
    return out;
}

inline AdjointTensor scalar_tensor(int dim, const Rat& value)
{
    AdjointTensor t(0, dim);
    t.entries[0] = value;
    return t;
}

inline AdjointTensor tensor_add(const AdjointTensor& a, const AdjointTensor& b)
{
    if (a.degree != b.degree)
        throw DegreeMismatch("tensor_add");
    if (a.dim != b.dim)
        throw DimMismatch("tensor_add");
    AdjointTensor out = a;
    for (std::size_t i = 0; i < out.entries.size(); ++i)
        out.entries[i] += b.entries[i];
    return out;
}

inline AdjointTensor tensor_scale(const AdjointTensor& a, const Rat& s)
{
    AdjointTensor out = a;
    for (auto& e : out.entries)
        e *= s;
    return out;
}

inline bool tensor_is_zero(const AdjointTensor& t)
{
    for (auto& e : t.entries)
        if (!is_zero(e))
            return false;
    return true;
}

struct PrimeVector {
    std::uint64_t prime = 0;
    std::vector<std::uint32_t> coords;
};

// Entrywise reduction mod p; a ring homomorphism wherever defined.
inline PrimeVector to_prime_vector(const AdjointTensor& t, std::uint64_t p)
{
    PrimeVector v;
    v.prime = p;
    v.coords.reserve(t.entries.size());
    for (auto& e : t.entries)
        v.coords.push_back(static_cast<std::uint32_t>(rat_mod(e, p)));
    return v;
}

} // namespace invtensor
