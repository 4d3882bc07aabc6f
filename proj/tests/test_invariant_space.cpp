#include <catch2/catch_amalgamated.hpp>

#include "invtensor/generators.hpp"
#include "invtensor/invariant_space.hpp"

using namespace invtensor;

namespace {

// Independent oracle for sl2: decompose adjoint^k by the spin recurrence
// (spin j) x (spin 1) = (j-1) + j + (j+1) and count trivial summands.
int sl2_adjoint_power_trivials(int k)
{
    std::vector<long> mult = { 1 }; // mult[j] for integer spins, start at spin 0
    for (int step = 0; step < k; ++step) {
        std::vector<long> next(mult.size() + 1, 0);
        for (std::size_t j = 0; j < mult.size(); ++j) {
            long m = mult[j];
            if (m == 0)
                continue;
            if (j >= 1)
                next[j - 1] += m;
            if (j >= 1)
                next[j] += m;
            next[j + 1] += m;
        }
        mult = std::move(next);
    }
    return static_cast<int>(mult[0]);
}

} // namespace

TEST_CASE("trace tensors are annihilated by the adjoint action")
{
    for (auto spec : { AlgebraSpec{ Family::A, 2 }, { Family::B, 2 }, { Family::D, 3 } }) {
        ClassicalAlgebra alg = build_algebra(spec);
        for (int k = 1; k <= 3; ++k)
            CHECK(is_invariant(alg, trace_tensor(alg, k)));
    }
}

TEST_CASE("non-invariant tensors are detected")
{
    ClassicalAlgebra alg = build_algebra({ Family::A, 1 });
    AdjointTensor t(2, alg.dimG);
    t.at({ 0, 0 }) = 1; // a single coordinate spike is never invariant here
    CHECK(!is_invariant(alg, t));
}

TEST_CASE("epsilon chain is adjoint-invariant")
{
    ClassicalAlgebra d3 = build_algebra({ Family::D, 3 });
    CHECK(is_invariant(d3, epsilon_chain_tensor(d3, { 1, 1, 1 })));
}

TEST_CASE("kernel dimensions match the sl2 spin oracle")
{
    ClassicalAlgebra a1 = build_algebra({ Family::A, 1 });
    for (int k = 1; k <= 6; ++k) {
        KernelResult res = kernel_dimension(a1, k);
        CHECK(res.dimension == sl2_adjoint_power_trivials(k));
        CHECK(!res.escalated);
    }
}

TEST_CASE("kernel dimension table at desk scale")
{
    auto dims = [](Family f, int r, int kmax) {
        ClassicalAlgebra alg = build_algebra({ f, r });
        std::vector<int> out;
        for (int k = 1; k <= kmax; ++k)
            out.push_back(kernel_dimension(alg, k).dimension);
        return out;
    };
    CHECK(dims(Family::A, 1, 6) == std::vector<int>{ 0, 1, 1, 3, 6, 15 });
    CHECK(dims(Family::A, 2, 4) == std::vector<int>{ 0, 1, 2, 8 });
    CHECK(dims(Family::B, 2, 4) == std::vector<int>{ 0, 1, 1, 6 });
    CHECK(dims(Family::C, 2, 4) == std::vector<int>{ 0, 1, 1, 6 });
    CHECK(dims(Family::D, 3, 3) == std::vector<int>{ 0, 1, 2 });
}

TEST_CASE("at least two primes are required")
{
    ClassicalAlgebra a1 = build_algebra({ Family::A, 1 });
    CHECK_THROWS_AS(kernel_dimension(a1, 2, { 2147483647ULL }), BadPrime);
}

TEST_CASE("verify_theorem certifies the generating claim")
{
    ClassicalAlgebra a1 = build_algebra({ Family::A, 1 });
    for (int k = 1; k <= 4; ++k) {
        VerificationReport rep = verify_theorem(a1, k);
        CHECK(rep.certified);
        CHECK(rep.membership_failures.empty());
        CHECK(rep.span_rank == rep.kernel_dim);
        CHECK(rep.prime_agreement);
        CHECK(rep.primes.size() >= 2);
    }
}

TEST_CASE("epsilon chains are necessary for D3 at degree 3")
{
    ClassicalAlgebra d3 = build_algebra({ Family::D, 3 });
    VerificationReport with = verify_theorem(d3, 3, true);
    VerificationReport without = verify_theorem(d3, 3, false);
    CHECK(with.certified);
    CHECK(with.kernel_dim == 2);
    CHECK(with.span_rank == 2);
    CHECK(!without.certified);
    CHECK(without.kernel_dim == 2);
    CHECK(without.span_rank == 1);
    CHECK(without.membership_failures.empty()); // traces are invariant, just not spanning
}

TEST_CASE("orientation-reversing transport fixes traces and negates epsilon chains")
{
    ClassicalAlgebra d3 = build_algebra({ Family::D, 3 });
    Mat R = orientation_reversing_matrix(d3);
    const Mat& g = *d3.form;
    CHECK(mat_is_zero(mat_sub(mat_mul(mat_transpose(R), mat_mul(g, R)), g)));
    CHECK(mat_det(R) == -1);

    Mat O = transport_on_algebra(d3, R);
    // O is a Lie algebra automorphism in coordinates: it preserves brackets
    for (int a = 0; a < d3.dimG; ++a)
        for (int b = 0; b < d3.dimG; ++b) {
            std::vector<Rat> lhs(d3.dimG, Rat(0)), rhs(d3.dimG, Rat(0));
            for (int ap = 0; ap < d3.dimG; ++ap)
                for (int bp = 0; bp < d3.dimG; ++bp)
                    if (!is_zero(O[ap][a]) && !is_zero(O[bp][b]))
                        for (auto& [gi, c] : d3.structure[ap][bp])
                            lhs[gi] += O[ap][a] * O[bp][b] * c;
            for (auto& [gi, c] : d3.structure[a][b])
                for (int gp = 0; gp < d3.dimG; ++gp)
                    if (!is_zero(O[gp][gi]))
                        rhs[gp] += c * O[gp][gi];
            for (int gi = 0; gi < d3.dimG; ++gi)
                CHECK(lhs[gi] == rhs[gi]);
        }

    for (int k = 1; k <= 3; ++k) {
        AdjointTensor t = trace_tensor(d3, k);
        CHECK(transport_tensor(t, O) == t);
    }
    AdjointTensor e = epsilon_chain_tensor(d3, { 1, 1, 1 });
    CHECK(transport_tensor(e, O) == tensor_scale(e, Rat(-1)));
}

TEST_CASE("transport is only defined for family D")
{
    ClassicalAlgebra b2 = build_algebra({ Family::B, 2 });
    CHECK_THROWS_AS(orientation_reversing_matrix(b2), WrongFamily);
}
