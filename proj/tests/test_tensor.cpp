#include <catch2/catch_amalgamated.hpp>

#include "invtensor/tensor.hpp"

using namespace invtensor;

TEST_CASE("row-major offsets")
{
    AdjointTensor t(3, 4);
    CHECK(t.entries.size() == 64);
    CHECK(t.offset({ 0, 0, 0 }) == 0);
    CHECK(t.offset({ 0, 0, 1 }) == 1);
    CHECK(t.offset({ 1, 0, 0 }) == 16);
    CHECK(t.offset({ 3, 3, 3 }) == 63);
}

TEST_CASE("entry budget enforced")
{
    CHECK_THROWS_AS(AdjointTensor(10, 100), BudgetExceeded);
    CHECK_NOTHROW(AdjointTensor(2, 100));
    CHECK_THROWS_AS(entry_count(3, 5, 100), BudgetExceeded);
    CHECK(entry_count(3, 4, 100) == 81);
}

TEST_CASE("permutation group structure")
{
    CHECK_THROWS_AS(Permutation({ 0, 0, 1 }), Error);
    Permutation sigma({ 1, 2, 0 });
    Permutation tau({ 1, 0, 2 });
    CHECK(sigma.sign() == 1);
    CHECK(tau.sign() == -1);
    Permutation inv = sigma.inverse();
    for (int i = 0; i < 3; ++i)
        CHECK(inv.images[sigma.images[i]] == i);
    // identity acts trivially
    AdjointTensor t(3, 2);
    for (std::size_t i = 0; i < t.entries.size(); ++i)
        t.entries[i] = Rat(static_cast<long>(i * i + 1), 3);
    CHECK(permute(Permutation::identity(3), t) == t);
}

TEST_CASE("permute places values by slot")
{
    // T[a,b] with distinct entries; the transposition must transpose
    AdjointTensor t(2, 3);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            t.at({ a, b }) = Rat(10 * a + b);
    AdjointTensor swapped = permute(Permutation({ 1, 0 }), t);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            CHECK(swapped.at({ a, b }) == t.at({ b, a }));
}

TEST_CASE("permute respects composition")
{
    AdjointTensor t(3, 3);
    for (std::size_t i = 0; i < t.entries.size(); ++i)
        t.entries[i] = Rat(static_cast<long>(7 * i + 3), 5);
    Permutation sigma({ 2, 0, 1 });
    Permutation tau({ 1, 2, 0 });
    AdjointTensor lhs = permute(sigma, permute(tau, t));
    AdjointTensor rhs = permute(sigma.after(tau), t);
    CHECK(lhs == rhs);
}

TEST_CASE("symmetrize is an idempotent projection onto symmetric tensors")
{
    AdjointTensor t(3, 2);
    for (std::size_t i = 0; i < t.entries.size(); ++i)
        t.entries[i] = Rat(static_cast<long>(i) - 3);
    AdjointTensor s = symmetrize(t);
    detail::for_each_permutation(3, [&](const std::vector<int>& im) {
        CHECK(permute(Permutation(im), s) == s);
    });
    CHECK(symmetrize(s) == s);
    // averaging: the sum of all entries is preserved
    Rat sum_t = 0, sum_s = 0;
    for (auto& e : t.entries)
        sum_t += e;
    for (auto& e : s.entries)
        sum_s += e;
    CHECK(sum_t == sum_s);
}

TEST_CASE("tensor product concatenates indices")
{
    AdjointTensor a(1, 2), b(2, 2);
    a.at({ 0 }) = 2;
    a.at({ 1 }) = 3;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            b.at({ i, j }) = Rat(1 + i * 2 + j);
    AdjointTensor p = tensor_product(a, b);
    REQUIRE(p.degree == 3);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                CHECK(p.at({ i, j, k }) == a.at({ i }) * b.at({ j, k }));
}

TEST_CASE("arithmetic helpers")
{
    AdjointTensor a(2, 2), b(2, 2);
    a.at({ 0, 1 }) = Rat(1, 2);
    b.at({ 0, 1 }) = Rat(1, 3);
    AdjointTensor sum = tensor_add(a, b);
    CHECK(sum.at({ 0, 1 }) == Rat(5, 6));
    CHECK(tensor_is_zero(tensor_add(a, tensor_scale(a, Rat(-1)))));
    AdjointTensor c(3, 2);
    CHECK_THROWS_AS(tensor_add(a, c), DegreeMismatch);
}

TEST_CASE("modular reduction of entries")
{
    AdjointTensor t(1, 3);
    t.at({ 0 }) = Rat(1, 2);
    t.at({ 1 }) = Rat(-1);
    t.at({ 2 }) = Rat(7);
    PrimeVector v = to_prime_vector(t, 11);
    CHECK(v.coords[0] == 6); // 2 * 6 = 12 = 1 mod 11
    CHECK(v.coords[1] == 10);
    CHECK(v.coords[2] == 7);
    t.at({ 0 }) = Rat(1, 11);
    CHECK_THROWS_AS(to_prime_vector(t, 11), BadPrime);
}
