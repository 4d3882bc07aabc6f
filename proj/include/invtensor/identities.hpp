#pragma once

// Standalone exact identities: epsilon-delta contraction, form swaps, the
// trace formulas for structure constants, the trace decomposition, the
// Jacobi identity written in traces, the Pfaffian correspondence, and the
// basic-invariant degree bookkeeping.

#include <optional>
#include <string>
#include <vector>

#include "invtensor/algebra.hpp"
#include "invtensor/generators.hpp"
#include "invtensor/pfaffian.hpp"
#include "invtensor/symmetric_invariants.hpp"
#include "invtensor/tensor.hpp"

namespace invtensor {

struct IdentityResult {
    std::string name;
    std::string subject; // algebra name or "generic n=..."
    bool passed = false;
    Rat max_abs_defect = Rat(0);
    std::optional<Rat> normalization;
    std::string detail; // offending tuple on failure, or notes
};

namespace detail {

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

inline void record_defect(IdentityResult& res, const Rat& defect, const std::string& where)
{
    Rat a = rat_abs(defect);
    if (a > res.max_abs_defect) {
        res.max_abs_defect = a;
        res.detail = where;
    }
}

// U[a_1..a_k] = T[a_{order[1]}..a_{order[k]}]
inline AdjointTensor arrange(const AdjointTensor& t, const std::vector<int>& order)
{
    return permute(Permutation(order).inverse(), t);
}

inline int epsilon_sign(const std::vector<int>& idx)
{
    int sign = 1;
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = i + 1; j < idx.size(); ++j) {
            if (idx[i] == idx[j])
                return 0;
            if (idx[i] > idx[j])
                sign = -sign;
        }
    return sign;
}

} // namespace detail

// eps_{a} eps^{b} = lambda * (1/n!) * antisymmetrized delta product, i.e.
// lambda * (1/n!) * det(delta_{a_i}^{b_j}); the pinned scalar is n!.
inline IdentityResult check_epsilon_delta(int n)
{
    IdentityResult res;
    res.name = "epsilon_delta";
    res.subject = "generic n=" + std::to_string(n);
    if (n < 2 || n > 6)
        throw Error("epsilon-delta check supports 2 <= n <= 6");
    if (n > 5)
        throw BudgetExceeded("epsilon-delta at n=6 means 6^12 entry pairs");

    Rat nfact = 1;
    for (int i = 2; i <= n; ++i)
        nfact *= i;
    Rat inv_nfact = Rat(1) / nfact;

    std::optional<Rat> lambda;
    std::vector<int> a(n, 0), b(n, 0);
    std::vector<std::vector<Rat>> delta(n, std::vector<Rat>(n));
    auto bump = [n](std::vector<int>& v) {
        for (int i = n - 1; i >= 0; --i) {
            if (++v[i] < n)
                return true;
            v[i] = 0;
        }
        return false;
    };
    do {
        int ea = detail::epsilon_sign(a);
        std::vector<int> bb(n, 0);
        do {
            int eb = detail::epsilon_sign(bb);
            Rat lhs = Rat(ea * eb);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    delta[i][j] = (a[i] == bb[j]) ? 1 : 0;
            Rat bracket = inv_nfact * mat_det(delta);
            if (!lambda && !is_zero(bracket)) {
                lambda = lhs / bracket;
            }
            Rat rhs = lambda ? (*lambda) * bracket : bracket;
            Rat defect = lhs - rhs;
            if (!is_zero(defect)) {
                std::string where = "a=(";
                for (int i = 0; i < n; ++i)
                    where += std::to_string(a[i] + 1) + (i + 1 < n ? "," : ")");
                detail::record_defect(res, defect, where);
            }
        } while (bump(bb));
    } while (bump(a));

    res.normalization = lambda.value_or(Rat(0));
    res.passed = is_zero(res.max_abs_defect) && lambda && *lambda == nfact;
    if (!res.passed && res.detail.empty())
        res.detail = "normalization scalar is not n!";
    return res;
}

// X^T g = -g X for every basis matrix (orthogonal and symplectic families).
inline IdentityResult check_form_swap(const ClassicalAlgebra& alg)
{
    IdentityResult res;
    res.name = "form_swap";
    res.subject = alg.spec.name();
    if (!alg.form)
        throw WrongFamily("no invariant form in the defining representation of " + alg.spec.name());
    const Mat& g = *alg.form;
    for (int a = 0; a < alg.dimG; ++a) {
        Mat lhs = mat_mul(mat_transpose(alg.basis[a]), g);
        Mat rhs = mat_scale(mat_mul(g, alg.basis[a]), Rat(-1));
        Mat diff = mat_sub(lhs, rhs);
        for (int i = 0; i < alg.dimV; ++i)
            for (int j = 0; j < alg.dimV; ++j)
                if (!is_zero(diff[i][j]))
                    detail::record_defect(res, diff[i][j],
                                          "basis " + std::to_string(a) + " entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
    res.passed = is_zero(res.max_abs_defect);
    return res;
}

// g_{ab} g^{bc} = delta_a^c with the stored dual form.
inline IdentityResult check_form_contraction(const ClassicalAlgebra& alg)
{
    IdentityResult res;
    res.name = "form_contraction";
    res.subject = alg.spec.name();
    if (!alg.form)
        throw WrongFamily("no invariant form in the defining representation of " + alg.spec.name());
    Mat prod = mat_mul(*alg.form, *alg.form_inverse);
    Mat diff = mat_sub(prod, mat_identity(alg.dimV));
    for (int i = 0; i < alg.dimV; ++i)
        for (int j = 0; j < alg.dimV; ++j)
            if (!is_zero(diff[i][j]))
                detail::record_defect(res, diff[i][j], "entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
    res.passed = is_zero(res.max_abs_defect);
    return res;
}

// c_{ab}^g = lambda * [tr(pi_a pi_b pi_d) - tr(pi_b pi_a pi_d)] K^{dg},
// with lambda the Killing-to-trace ratio so both sides use the same form.
inline IdentityResult structure_constants_from_traces(const ClassicalAlgebra& alg, bool sign_flip_control = false)
{
    IdentityResult res;
    res.name = sign_flip_control ? "structure_constants_from_traces_control" : "structure_constants_from_traces";
    res.subject = alg.spec.name();
    Rat lambda = killing_ratio(alg);
    res.normalization = lambda;
    std::vector<SpMat> pis = rep_matrices(alg, Rep::Defining);
    const int d = alg.dimG;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            SpMat ab = sp_mul(pis[a], pis[b]);
            SpMat ba = sp_mul(pis[b], pis[a]);
            std::vector<Rat> tr_comm(d);
            for (int dd = 0; dd < d; ++dd) {
                Rat t = sp_trace_mul(ab, pis[dd]) - sp_trace_mul(ba, pis[dd]);
                tr_comm[dd] = sign_flip_control ? sp_trace_mul(ab, pis[dd]) + sp_trace_mul(ba, pis[dd]) : t;
            }
            for (int g = 0; g < d; ++g) {
                Rat rhs = 0;
                for (int dd = 0; dd < d; ++dd)
                    if (!is_zero(alg.killing_inverse[dd][g]))
                        rhs += lambda * tr_comm[dd] * alg.killing_inverse[dd][g];
                Rat defect = alg.structure_constant(a, b, g) - rhs;
                if (!is_zero(defect))
                    detail::record_defect(res, defect,
                                          "(a,b,g)=(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(g) + ")");
            }
        }
    res.passed = is_zero(res.max_abs_defect);
    return res;
}

// pi_a pi_b = (1/2){pi_a, pi_b} + (1/2) c_{ab}^g pi_g as matrices, and the
// induced splitting of the degree-3 trace tensor.
inline IdentityResult check_trace_decomposition(const ClassicalAlgebra& alg)
{
    IdentityResult res;
    res.name = "trace_decomposition";
    res.subject = alg.spec.name();
    const int d = alg.dimG;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            Mat lhs = mat_mul(alg.basis[a], alg.basis[b]);
            Mat sym = mat_scale(mat_add(mat_mul(alg.basis[a], alg.basis[b]), mat_mul(alg.basis[b], alg.basis[a])), Rat(1, 2));
            Mat rest = mat_zero(alg.dimV, alg.dimV);
            for (auto& [g, c] : alg.structure[a][b])
                rest = mat_add(rest, mat_scale(alg.basis[g], c / 2));
            Mat diff = mat_sub(lhs, mat_add(sym, rest));
            for (int i = 0; i < alg.dimV; ++i)
                for (int j = 0; j < alg.dimV; ++j)
                    if (!is_zero(diff[i][j]))
                        detail::record_defect(res, diff[i][j], "(a,b)=(" + std::to_string(a) + "," + std::to_string(b) + ")");
        }

    // consequence at the tensor level: T3 = (its symmetrization in the
    // first two slots) + (1/2) c contracted into T2
    AdjointTensor t3 = trace_tensor(alg, 3);
    AdjointTensor t2 = trace_tensor(alg, 2);
    AdjointTensor swapped = detail::arrange(t3, { 1, 0, 2 });
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int g = 0; g < d; ++g) {
                Rat rhs = (t3.at({ a, b, g }) + swapped.at({ a, b, g })) / 2;
                for (auto& [e, c] : alg.structure[a][b])
                    rhs += c / 2 * t2.at({ e, g });
                Rat defect = t3.at({ a, b, g }) - rhs;
                if (!is_zero(defect))
                    detail::record_defect(res, defect, "tensor (a,b,g)=(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(g) + ")");
            }
    res.passed = is_zero(res.max_abs_defect);
    return res;
}

// c_{ab}^d c_{dg}^e K_{ez} written through traces: the double bracket
// against the Killing form equals lambda * [tr(abgz) - tr(bagz) - tr(gabz)
// + tr(gbaz)], and its cyclic sum in (a,b,g) vanishes.
inline IdentityResult check_jacobi_as_traces(const ClassicalAlgebra& alg, bool sign_flip_control = false)
{
    IdentityResult res;
    res.name = sign_flip_control ? "jacobi_as_traces_control" : "jacobi_as_traces";
    res.subject = alg.spec.name();
    const int d = alg.dimG;
    Rat lambda = killing_ratio(alg);
    res.normalization = lambda;

    AdjointTensor t4 = trace_tensor(alg, 4);
    AdjointTensor term1 = t4;                                  // tr(a b g z)
    AdjointTensor term2 = detail::arrange(t4, { 1, 0, 2, 3 }); // tr(b a g z)
    AdjointTensor term3 = detail::arrange(t4, { 2, 0, 1, 3 }); // tr(g a b z)
    AdjointTensor term4 = detail::arrange(t4, { 2, 1, 0, 3 }); // tr(g b a z)

    AdjointTensor combo = term1;
    for (std::size_t i = 0; i < combo.entries.size(); ++i) {
        Rat second = sign_flip_control ? term2.entries[i] : -term2.entries[i];
        combo.entries[i] = term1.entries[i] + second - term3.entries[i] + term4.entries[i];
    }
    combo = tensor_scale(combo, lambda);

    // the structure-constant side
    AdjointTensor lhs(4, d);
    std::vector<int> idx(4);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (auto& [dd, c1] : alg.structure[a][b])
                for (int g = 0; g < d; ++g)
                    for (auto& [e, c2] : alg.structure[dd][g])
                        for (int z = 0; z < d; ++z)
                            if (!is_zero(alg.killing[e][z]))
                                lhs.at({ a, b, g, z }) += c1 * c2 * alg.killing[e][z];

    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int g = 0; g < d; ++g)
                for (int z = 0; z < d; ++z) {
                    Rat defect = lhs.at({ a, b, g, z }) - combo.at({ a, b, g, z });
                    if (!is_zero(defect))
                        detail::record_defect(res, defect,
                                              "trace form at (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(g) + "," + std::to_string(z) + ")");
                }

    // cyclic Jacobi sum, expressed purely in the trace combination
    AdjointTensor cyc1 = combo;
    AdjointTensor cyc2 = detail::arrange(combo, { 1, 2, 0, 3 });
    AdjointTensor cyc3 = detail::arrange(combo, { 2, 0, 1, 3 });
    AdjointTensor total = tensor_add(tensor_add(cyc1, cyc2), cyc3);
    for (std::size_t i = 0; i < total.entries.size(); ++i)
        if (!is_zero(total.entries[i]))
            detail::record_defect(res, total.entries[i], "cyclic sum entry " + std::to_string(i));

    res.passed = is_zero(res.max_abs_defect);
    return res;
}

// symmetrize(epsilon chain with unit lengths) = mu * polarized Pfaffian,
// plus matching-expansion self-tests against the determinant.
inline IdentityResult check_pfaffian_correspondence(const ClassicalAlgebra& alg)
{
    IdentityResult res;
    res.name = "pfaffian_correspondence";
    res.subject = alg.spec.name();
    if (alg.spec.family != Family::D)
        throw WrongFamily("the Pfaffian correspondence needs family D");
    const int r = alg.spec.rank;

    AdjointTensor chain = symmetrize(epsilon_chain_tensor(alg, std::vector<int>(r, 1)));
    AdjointTensor pf = polarized_pfaffian_tensor(alg);

    std::optional<Rat> mu;
    for (std::size_t i = 0; i < chain.entries.size(); ++i) {
        const Rat& c = chain.entries[i];
        const Rat& p = pf.entries[i];
        if (is_zero(p)) {
            if (!is_zero(c))
                detail::record_defect(res, c, "chain nonzero where pfaffian vanishes, entry " + std::to_string(i));
            continue;
        }
        if (!mu)
            mu = c / p;
        Rat defect = c - (*mu) * p;
        if (!is_zero(defect))
            detail::record_defect(res, defect, "entry " + std::to_string(i));
    }
    res.normalization = mu.value_or(Rat(0));

    // oracle self-tests
    Mat two = mat_zero(2, 2);
    two[0][1] = Rat(7, 3);
    two[1][0] = Rat(-7, 3);
    if (pfaffian(two) != Rat(7, 3))
        detail::record_defect(res, pfaffian(two) - Rat(7, 3), "2x2 self-test");
    SplitMix64 rng(0xabcdef12345ULL);
    for (int s = 0; s < 3; ++s) {
        Mat m = mat_zero(6, 6);
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j) {
                long num = static_cast<long>(rng.below(19)) - 9;
                unsigned long den = 1 + rng.below(7);
                m[i][j] = Rat(num, den);
                m[i][j].canonicalize();
                m[j][i] = -m[i][j];
            }
        Rat p = pfaffian(m);
        Rat defect = p * p - mat_det(m);
        if (!is_zero(defect))
            detail::record_defect(res, defect, "pf^2 = det sample " + std::to_string(s));
    }

    res.passed = is_zero(res.max_abs_defect) && mu && !is_zero(*mu);
    if (!mu)
        res.detail = "no nonzero pfaffian entry found";
    return res;
}

// The degrees where new basic invariants appear, each realized by a
// nonvanishing symmetrized trace (or the Pfaffian in family D at degree r),
// with odd-degree symmetrized traces vanishing for B and C.
inline IdentityResult check_chevalley_degrees(const ClassicalAlgebra& alg,
                                              std::vector<u64> primes = default_primes(),
                                              std::int64_t budget = kDefaultModularBudget)
{
    IdentityResult res;
    res.name = "chevalley_degrees";
    res.subject = alg.spec.name();
    std::vector<int> degrees = invariant_generator_degrees(alg, primes, budget);
    std::string degs;
    for (std::size_t i = 0; i < degrees.size(); ++i)
        degs += (i ? "," : "") + std::to_string(degrees[i]);
    res.detail = "degrees " + degs;
    bool ok = true;

    int pfaffian_slots = 0;
    for (int deg : degrees) {
        bool trace_nonzero = !symmetrized_trace_is_zero(alg, deg, Rep::Defining);
        if (trace_nonzero)
            continue;
        if (alg.spec.family == Family::D && deg == alg.spec.rank && pfaffian_slots == 0) {
            if (!tensor_is_zero(polarized_pfaffian_tensor(alg))) {
                ++pfaffian_slots;
                continue;
            }
        }
        ok = false;
        res.detail += "; no generator realized at degree " + std::to_string(deg);
        res.max_abs_defect = 1;
    }

    if (alg.spec.family == Family::B || alg.spec.family == Family::C) {
        if (!symmetrized_trace_is_zero(alg, 3, Rep::Defining)) {
            ok = false;
            res.detail += "; odd symmetrized trace failed to vanish at degree 3";
            res.max_abs_defect = 1;
        }
    }
    res.passed = ok;
    return res;
}

inline std::vector<IdentityResult> run_identities(const ClassicalAlgebra& alg,
                                                  std::vector<u64> primes = default_primes(),
                                                  std::int64_t budget = kDefaultModularBudget)
{
    std::vector<IdentityResult> out;
    if (alg.form) {
        out.push_back(check_form_swap(alg));
        out.push_back(check_form_contraction(alg));
    }
    out.push_back(structure_constants_from_traces(alg));
    out.push_back(check_trace_decomposition(alg));
    out.push_back(check_jacobi_as_traces(alg));
    if (alg.spec.family == Family::D)
        out.push_back(check_pfaffian_correspondence(alg));
    out.push_back(check_chevalley_degrees(alg, primes, budget));
    return out;
}

} // namespace invtensor
