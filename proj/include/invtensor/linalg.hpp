#pragma once

// Small dense exact-rational linear algebra. Everything here operates on
// matrices no larger than a few hundred rows, so plain Gauss-Jordan is fine.

#include <cassert>
#include <vector>

#include "invtensor/errors.hpp"
#include "invtensor/rational.hpp"

namespace invtensor {

using Mat = std::vector<std::vector<Rat>>;

inline Mat mat_zero(int r, int c) { return Mat(r, std::vector<Rat>(c, Rat(0))); }

inline Mat mat_identity(int n)
{
    Mat m = mat_zero(n, n);
    for (int i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

inline Mat mat_mul(const Mat& a, const Mat& b)
{
    int r = static_cast<int>(a.size());
    int k = static_cast<int>(b.size());
    int c = static_cast<int>(b[0].size());
    Mat out = mat_zero(r, c);
    for (int i = 0; i < r; ++i)
        for (int t = 0; t < k; ++t) {
            if (is_zero(a[i][t]))
                continue;
            for (int j = 0; j < c; ++j)
                if (!is_zero(b[t][j]))
                    out[i][j] += a[i][t] * b[t][j];
        }
    return out;
}

inline Mat mat_sub(const Mat& a, const Mat& b)
{
    Mat out = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j)
            out[i][j] -= b[i][j];
    return out;
}

inline Mat mat_add(const Mat& a, const Mat& b)
{
    Mat out = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j)
            out[i][j] += b[i][j];
    return out;
}

inline Mat mat_scale(const Mat& a, const Rat& s)
{
    Mat out = a;
    for (auto& row : out)
        for (auto& x : row)
            x *= s;
    return out;
}

inline Mat mat_transpose(const Mat& a)
{
    Mat out = mat_zero(static_cast<int>(a[0].size()), static_cast<int>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j)
            out[j][i] = a[i][j];
    return out;
}

inline Rat mat_trace(const Mat& a)
{
    Rat t = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        t += a[i][i];
    return t;
}

inline Mat mat_bracket(const Mat& a, const Mat& b) { return mat_sub(mat_mul(a, b), mat_mul(b, a)); }

inline bool mat_is_zero(const Mat& a)
{
    for (auto& row : a)
        for (auto& x : row)
            if (!is_zero(x))
                return false;
    return true;
}

// Gauss-Jordan inverse; throws on a singular input.
inline Mat mat_inverse(const Mat& a)
{
    int n = static_cast<int>(a.size());
    Mat w = a, inv = mat_identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!is_zero(w[r][col])) {
                piv = r;
                break;
            }
        if (piv < 0)
            throw Error("mat_inverse: singular matrix");
        std::swap(w[piv], w[col]);
        std::swap(inv[piv], inv[col]);
        Rat d = w[col][col];
        for (int j = 0; j < n; ++j) {
            w[col][j] /= d;
            inv[col][j] /= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || is_zero(w[r][col]))
                continue;
            Rat f = w[r][col];
            for (int j = 0; j < n; ++j) {
                w[r][j] -= f * w[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

inline Rat mat_det(const Mat& a)
{
    int n = static_cast<int>(a.size());
    Mat w = a;
    Rat det = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!is_zero(w[r][col])) {
                piv = r;
                break;
            }
        if (piv < 0)
            return Rat(0);
        if (piv != col) {
            std::swap(w[piv], w[col]);
            det = -det;
        }
        det *= w[col][col];
        Rat d = w[col][col];
        for (int r = col + 1; r < n; ++r) {
            if (is_zero(w[r][col]))
                continue;
            Rat f = w[r][col] / d;
            for (int j = col; j < n; ++j)
                w[r][j] -= f * w[col][j];
        }
    }
    return det;
}

// Incremental exact row space; used for bracket-closure computations.
class RatSpan {
public:
    explicit RatSpan(int ncols) : ncols_(ncols), pivot_of_col_(ncols, -1) {}

    bool contains(const std::vector<Rat>& v) const
    {
        std::vector<Rat> w = v;
        reduce(w);
        for (auto& x : w)
            if (!is_zero(x))
                return false;
        return true;
    }

    // Returns true when v enlarged the span.
    bool insert(const std::vector<Rat>& v)
    {
        std::vector<Rat> w = v;
        reduce(w);
        for (int c = 0; c < ncols_; ++c) {
            if (is_zero(w[c]))
                continue;
            Rat d = w[c];
            for (auto& x : w)
                x /= d;
            pivot_of_col_[c] = static_cast<int>(rows_.size());
            rows_.push_back(std::move(w));
            pivcols_.push_back(c);
            return true;
        }
        return false;
    }

    int rank() const { return static_cast<int>(rows_.size()); }

private:
    void reduce(std::vector<Rat>& w) const
    {
        for (int c = 0; c < ncols_; ++c) {
            if (is_zero(w[c]) || pivot_of_col_[c] < 0)
                continue;
            const auto& row = rows_[pivot_of_col_[c]];
            Rat f = w[c];
            for (int j = c; j < ncols_; ++j)
                w[j] -= f * row[j];
        }
    }

    int ncols_;
    std::vector<int> pivot_of_col_;
    std::vector<std::vector<Rat>> rows_;
    std::vector<int> pivcols_;
};

} // namespace invtensor
