#include <catch2/catch_amalgamated.hpp>

#include "invtensor/generators.hpp"
#include "invtensor/modp.hpp"

using namespace invtensor;

TEST_CASE("degree-2 trace tensor is the trace form")
{
    for (auto spec : { AlgebraSpec{ Family::A, 1 }, { Family::B, 2 }, { Family::C, 2 }, { Family::D, 3 } }) {
        ClassicalAlgebra alg = build_algebra(spec);
        AdjointTensor t2 = trace_tensor(alg, 2);
        Rat lambda = killing_ratio(alg);
        for (int a = 0; a < alg.dimG; ++a)
            for (int b = 0; b < alg.dimG; ++b) {
                CHECK(t2.at({ a, b }) == mat_trace(mat_mul(alg.basis[a], alg.basis[b])));
                CHECK(lambda * t2.at({ a, b }) == alg.killing[a][b]);
            }
    }
}

TEST_CASE("trace tensors are cyclic")
{
    ClassicalAlgebra alg = build_algebra({ Family::A, 2 });
    for (int k = 2; k <= 4; ++k) {
        AdjointTensor t = trace_tensor(alg, k);
        std::vector<int> rot(k);
        for (int i = 0; i < k; ++i)
            rot[i] = (i + 1) % k;
        CHECK(permute(Permutation(rot), t) == t);
    }
}

TEST_CASE("index reversal flips sign per degree when a form is present")
{
    // X^T = -g X g^{-1} makes the reversed product a transpose up to (-1)^k
    for (auto spec : { AlgebraSpec{ Family::B, 2 }, { Family::C, 2 }, { Family::D, 3 } }) {
        ClassicalAlgebra alg = build_algebra(spec);
        for (int k = 2; k <= 3; ++k) {
            AdjointTensor t = trace_tensor(alg, k);
            std::vector<int> rev(k);
            for (int i = 0; i < k; ++i)
                rev[i] = k - 1 - i;
            AdjointTensor reversed = permute(Permutation(rev), t);
            AdjointTensor expected = k % 2 == 0 ? t : tensor_scale(t, Rat(-1));
            CHECK(reversed == expected);
        }
    }
}

TEST_CASE("matrix chain reproduces entrywise products and traces")
{
    ClassicalAlgebra alg = build_algebra({ Family::A, 1 });
    MatrixChain chain = pi_chain(alg, 2);
    for (int a = 0; a < alg.dimV; ++a)
        for (int b = 0; b < alg.dimV; ++b)
            for (int al = 0; al < alg.dimG; ++al)
                for (int be = 0; be < alg.dimG; ++be) {
                    Mat prod = mat_mul(alg.basis[al], alg.basis[be]);
                    CHECK(chain.entry[a][b].at({ al, be }) == prod[a][b]);
                }
    ClassicalAlgebra a2 = build_algebra({ Family::A, 2 });
    for (int k = 1; k <= 3; ++k)
        CHECK(trace_of_chain(pi_chain(a2, k)) == trace_tensor(a2, k));
}

TEST_CASE("epsilon chains exist only for family D with one length per chain")
{
    ClassicalAlgebra b2 = build_algebra({ Family::B, 2 });
    CHECK_THROWS_AS(epsilon_chain_tensor(b2, { 1, 1 }), WrongFamily);
    ClassicalAlgebra d3 = build_algebra({ Family::D, 3 });
    CHECK_THROWS_AS(epsilon_chain_tensor(d3, { 1, 1 }), Error);
    CHECK_THROWS_AS(epsilon_chain_tensor(d3, { 1, 1, 0 }), Error);
    CHECK_NOTHROW(epsilon_chain_tensor(d3, { 1, 1, 1 }));
}

TEST_CASE("epsilon chain matches the direct Levi-Civita contraction")
{
    ClassicalAlgebra alg = build_algebra({ Family::D, 3 });
    const int n = alg.dimV, r = 3;
    AdjointTensor e = epsilon_chain_tensor(alg, { 1, 1, 1 });

    auto eps_sign = [](const std::vector<int>& idx) {
        int sign = 1;
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = i + 1; j < idx.size(); ++j) {
                if (idx[i] == idx[j])
                    return 0;
                if (idx[i] > idx[j])
                    sign = -sign;
            }
        return sign;
    };
    std::vector<Mat> m(alg.dimG);
    for (int a = 0; a < alg.dimG; ++a)
        m[a] = mat_mul(alg.basis[a], *alg.form_inverse);

    SplitMix64 rng(12345);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<int> al(r);
        for (int& x : al)
            x = static_cast<int>(rng.below(alg.dimG));
        Rat direct = 0;
        std::vector<int> j(2 * r, 0);
        // all (v_1..v_r, u_1..u_r) assignments against the full epsilon
        for (;;) {
            int s = eps_sign(j);
            if (s != 0) {
                Rat prod = s;
                for (int i = 0; i < r; ++i)
                    prod *= m[al[i]][j[r + i]][j[i]];
                direct += prod;
            }
            int t = 2 * r - 1;
            while (t >= 0 && ++j[t] == n)
                j[t--] = 0;
            if (t < 0)
                break;
        }
        CHECK(e.at(al) == direct);
    }
}

TEST_CASE("realize assembles permuted trace products")
{
    ClassicalAlgebra alg = build_algebra({ Family::A, 2 });
    GeneratorDescriptor plain;
    plain.kind = GeneratorDescriptor::Kind::TraceProduct;
    plain.cycles = { { 0, 1 } };
    plain.perm = Permutation::identity(2);
    CHECK(realize(alg, plain) == trace_tensor(alg, 2));

    GeneratorDescriptor split;
    split.kind = GeneratorDescriptor::Kind::TraceProduct;
    split.cycles = { { 0, 2 }, { 1 } };
    split.perm = Permutation::identity(3);
    AdjointTensor t = realize(alg, split);
    AdjointTensor t2 = trace_tensor(alg, 2);
    AdjointTensor t1 = trace_tensor(alg, 1);
    for (int a = 0; a < alg.dimG; ++a)
        for (int b = 0; b < alg.dimG; ++b)
            for (int c = 0; c < alg.dimG; ++c)
                CHECK(t.at({ a, b, c }) == t2.at({ a, c }) * t1.at({ b }));

    GeneratorDescriptor cyc3;
    cyc3.kind = GeneratorDescriptor::Kind::TraceProduct;
    cyc3.cycles = { { 0, 2, 1 } };
    cyc3.perm = Permutation::identity(3);
    AdjointTensor u = realize(alg, cyc3);
    AdjointTensor t3 = trace_tensor(alg, 3);
    for (int a = 0; a < alg.dimG; ++a)
        for (int b = 0; b < alg.dimG; ++b)
            for (int c = 0; c < alg.dimG; ++c)
                CHECK(u.at({ a, b, c }) == t3.at({ a, c, b }));
}

TEST_CASE("generator enumeration counts")
{
    ClassicalAlgebra a1 = build_algebra({ Family::A, 1 });
    CHECK(enumerate_generators(a1, 1).size() == 1);
    CHECK(enumerate_generators(a1, 2).size() == 2);
    CHECK(enumerate_generators(a1, 3).size() == 6);
    CHECK(enumerate_generators(a1, 4).size() == 24);

    ClassicalAlgebra d3 = build_algebra({ Family::D, 3 });
    std::vector<GeneratorDescriptor> gens = enumerate_generators(d3, 3);
    int eps = 0;
    for (auto& g : gens)
        if (g.kind == GeneratorDescriptor::Kind::EpsilonChain)
            ++eps;
    CHECK(gens.size() == 7);
    CHECK(eps == 1); // the unit-length chain is antisymmetric, so one orbit survives
    CHECK(enumerate_generators(d3, 3, false).size() == 6);

    // ids are unique
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            CHECK(gens[i].id != gens[j].id);

    CHECK_THROWS_AS(enumerate_generators(a1, 9), BudgetExceeded);
}

TEST_CASE("symmetrized trace vanishing checker")
{
    ClassicalAlgebra b2 = build_algebra({ Family::B, 2 });
    CHECK(symmetrized_trace_is_zero(b2, 3, Rep::Defining));
    CHECK(!symmetrized_trace_is_zero(b2, 2, Rep::Defining));
    CHECK(!symmetrized_trace_is_zero(b2, 4, Rep::Defining));
    CHECK(symmetrized_trace_is_zero(b2, 3, Rep::Adjoint));

    // agrees with the dense symmetrization
    AdjointTensor s = symmetrize(trace_tensor(b2, 3));
    CHECK(tensor_is_zero(s));
    AdjointTensor s2 = symmetrize(trace_tensor(b2, 2));
    CHECK(!tensor_is_zero(s2));
}
