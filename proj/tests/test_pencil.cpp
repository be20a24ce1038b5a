/*
 * Copyright 2026 The veronese authors. All rights reserved.
 * This file is licensed to you under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License. You may obtain a copy
 * of the License at http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software distributed under
 * the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR REPRESENTATIONS
 * OF ANY KIND, either express or implied. See the License for the specific language
 * governing permissions and limitations under the License.
 */

#include "support.hpp"

#include <veronese/error.hpp>
#include <veronese/pencil.hpp>

#include <doctest.h>

using namespace veronese;
using veronese::testing::Rng;

namespace {

SkewPencil nonregular_at(const Scalar& q1)
{
    // (p1, p2, q1, q2, q3, q4); c1 = dp1^dq1 + dp2^dq2, c2 = dp1^(dq2 + q1 dq3) + dp2^dq4
    Mat a(6, 6);
    Mat b(6, 6);
    auto put = [](Mat& m, std::size_t i, std::size_t j, const Scalar& v) {
        m(i, j) = v;
        m(j, i) = -v;
    };
    put(a, 0, 2, 1);
    put(a, 1, 3, 1);
    put(b, 0, 3, 1);
    put(b, 0, 4, q1);
    put(b, 1, 5, 1);
    return SkewPencil(a, b);
}

// Homogeneous kernel polynomial check: (l1 A + l2 B) v(l) = 0 coefficientwise.
bool is_polynomial_kernel(const SkewPencil& p, const PolyKernelVector& v)
{
    const std::size_t n = p.dim();
    for (std::size_t s = 0; s <= v.degree + 1; ++s) {
        Vec acc(n);
        if (s <= v.degree) {
            const Vec t = p.a() * v.coeffs[s];
            for (std::size_t j = 0; j < n; ++j) acc[j] += t[j];
        }
        if (s >= 1) {
            const Vec t = p.b() * v.coeffs[s - 1];
            for (std::size_t j = 0; j < n; ++j) acc[j] += t[j];
        }
        if (!is_zero(acc)) return false;
    }
    return true;
}

} // namespace

TEST_CASE("skew pencil validation")
{
    CHECK_THROWS_AS(SkewPencil(Mat{{1, 0}, {0, 0}}, Mat(2, 2)), Error);
    CHECK_THROWS_AS(SkewPencil(Mat(2, 2), Mat(3, 3)), Error);
    CHECK_THROWS_AS(Lambda(0, 0), Error);
    CHECK(Lambda(2, 4).normalized().l2() == 2);
    CHECK(Lambda(0, 5).normalized().l2() == 1);
    CHECK(Lambda(2, 4).projectively_equal(Lambda(-1, -2)));
}

TEST_CASE("eval at coordinate parameters and on the illustration pencil")
{
    const SkewPencil p = veronese::testing::illustration_pencil();
    CHECK(eval(p, Lambda(1, 0)) == p.a());
    CHECK(eval(p, Lambda(0, 1)) == p.b());
    // p ^ (2 q1 + 3 q2)
    Mat expected(4, 4);
    expected(1, 2) = 2;
    expected(2, 1) = -2;
    expected(1, 3) = 3;
    expected(3, 1) = -3;
    CHECK(eval(p, Lambda(2, 3)) == expected);
}

TEST_CASE("generic rank")
{
    CHECK(generic_rank(kronecker_block(1)) == 2);
    CHECK(generic_rank(SkewPencil(Mat(1, 1), Mat(1, 1))) == 0);
    CHECK(generic_rank(nonregular_at(Scalar(3, 2))) == 4);
    CHECK(generic_rank(nonregular_at(0)) == 4);
    // B alone has rank 2 here and A has rank 0: the sample must see (1, t) for t > 0.
    CHECK(generic_rank(SkewPencil(Mat(3, 3), kronecker_block(1).b())) == 2);
}

TEST_CASE("minimal indices on named pencils")
{
    CHECK(minimal_indices(kronecker_block(1)) == std::vector<std::size_t>{1});
    CHECK(minimal_indices(SkewPencil(Mat(1, 1), Mat(1, 1))) == std::vector<std::size_t>{0});
    const Mat j{{0, 1}, {-1, 0}};
    CHECK(minimal_indices(SkewPencil(j, j * Scalar(5))).empty());
    CHECK(minimal_indices(veronese::testing::illustration_pencil()) == std::vector<std::size_t>{0, 1});
    CHECK(minimal_indices(nonregular_at(7)) == std::vector<std::size_t>{1, 1});
    CHECK(minimal_indices(nonregular_at(0)) == std::vector<std::size_t>{0, 2});
}

TEST_CASE("assemble-then-recover on a disguised {0,2} pencil")
{
    Rng rng(11);
    const SkewPencil p = veronese::testing::disguise(rng, veronese::testing::blocks_for({0, 2}));
    CHECK(minimal_indices(p) == std::vector<std::size_t>{0, 2});
}

TEST_CASE("analyze")
{
    SUBCASE("illustration pencil")
    {
        const PencilAnalysis an = analyze(veronese::testing::illustration_pencil());
        CHECK(an.generic_rank == 2);
        CHECK(an.minimal_indices == std::vector<std::size_t>{0, 1});
        CHECK(an.complete);
        CHECK(an.simple);
        CHECK(an.kronecker_dim == 4);
        // L = span{p}
        CHECK(an.bilagrangian == Subspace::span(Mat{{0, 1, 0, 0}}));
    }
    SUBCASE("non-regular pencil off and on the hyperplane")
    {
        const PencilAnalysis off = analyze(nonregular_at(-2));
        CHECK(off.minimal_indices == std::vector<std::size_t>{1, 1});
        CHECK(off.complete);
        CHECK_FALSE(off.simple);
        const PencilAnalysis on = analyze(nonregular_at(0));
        CHECK(on.minimal_indices == std::vector<std::size_t>{0, 2});
        CHECK(on.complete);
        CHECK(on.simple);
        CHECK(on.bilagrangian.dim() == 2);
    }
    SUBCASE("Jordan summand makes the pencil incomplete")
    {
        Rng rng(5);
        auto parts = veronese::testing::blocks_for({1});
        parts.push_back(jordan_block(2, Scalar(3, 2)));
        const PencilAnalysis an = analyze(veronese::testing::disguise(rng, parts));
        CHECK_FALSE(an.complete);
        CHECK(an.jordan_dim == 4);
        CHECK(an.minimal_indices == std::vector<std::size_t>{1});
    }
    SUBCASE("pure Jordan pencil")
    {
        const Mat j{{0, 1}, {-1, 0}};
        const PencilAnalysis an = analyze(SkewPencil(j, j * Scalar(5)));
        CHECK_FALSE(an.complete);
        CHECK(an.jordan_dim == 2);
        CHECK(an.generic_rank == 2);
    }
}

TEST_CASE("minimal kernel basis vectors are polynomial kernels")
{
    Rng rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        const auto idx = veronese::testing::random_indices(rng, 3, 12, false);
        const SkewPencil p = veronese::testing::disguise(rng, veronese::testing::blocks_for(idx));
        const auto basis = minimal_kernel_basis(p);
        REQUIRE(basis.size() == idx.size());
        std::vector<std::size_t> degs;
        for (const auto& v : basis) {
            CHECK(is_polynomial_kernel(p, v));
            degs.push_back(v.degree);
        }
        CHECK(degs == veronese::testing::sorted(idx));
    }
}

TEST_CASE("kronecker basis")
{
    SUBCASE("canonical pencils give the identity")
    {
        CHECK(kronecker_basis(kronecker_block(2)).s == Mat::identity(5));
        CHECK(kronecker_basis(canonical_pencil({0, 1, 3})).s == Mat::identity(11));
        const KroneckerBasis kb = kronecker_basis(veronese::testing::illustration_pencil());
        CHECK(kb.s == Mat::identity(4));
        CHECK(kb.block_layout == std::vector<std::size_t>{1, 3});
    }
    SUBCASE("random congruence of blocks {1,2}")
    {
        Rng rng(2024);
        const SkewPencil p = veronese::testing::disguise(rng, veronese::testing::blocks_for({2, 1}));
        const KroneckerBasis kb = kronecker_basis(p);
        CHECK(kb.block_layout == std::vector<std::size_t>{3, 5});
        CHECK(congruence(p, kb.s) == canonical_pencil({1, 2}));
    }
    SUBCASE("repeated indices and mixed sizes")
    {
        Rng rng(8);
        for (int trial = 0; trial < 15; ++trial) {
            const auto idx = veronese::testing::random_indices(rng, 3, 12, false);
            const SkewPencil p = veronese::testing::disguise(rng, veronese::testing::blocks_for(idx));
            const KroneckerBasis kb = kronecker_basis(p);
            CHECK(congruence(p, kb.s) == canonical_pencil(veronese::testing::sorted(idx)));
        }
    }
    SUBCASE("non-regular pencil with equal indices")
    {
        const KroneckerBasis kb = kronecker_basis(nonregular_at(4));
        CHECK(kb.block_layout == std::vector<std::size_t>{3, 3});
    }
    SUBCASE("incomplete pencil is rejected")
    {
        const Mat j{{0, 1}, {-1, 0}};
        try {
            kronecker_basis(SkewPencil(j, j * Scalar(5)));
            FAIL("expected NotComplete");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NotComplete);
        }
    }
}

TEST_CASE("pencil invariants on random assemblies")
{
    Rng rng(31337);
    for (int trial = 0; trial < 100; ++trial) {
        const auto idx = veronese::testing::random_indices(rng, 3, 12, false);
        const SkewPencil p = veronese::testing::disguise(rng, veronese::testing::blocks_for(idx));
        const PencilAnalysis an = analyze(p);
        CHECK(an.generic_rank % 2 == 0);
        CHECK(an.complete);
        CHECK(2 * an.bilagrangian.dim() == an.generic_rank);

        // congruence and pencil-basis invariance
        const SkewPencil moved = congruence(p, rng.invertible(p.dim()));
        CHECK(minimal_indices(moved) == an.minimal_indices);
        Scalar a, b, c, d;
        do {
            a = rng.uniform(-3, 3);
            b = rng.uniform(-3, 3);
            c = rng.uniform(-3, 3);
            d = rng.uniform(-3, 3);
        } while (a * d - b * c == 0);
        CHECK(minimal_indices(rebase(p, a, b, c, d)) == an.minimal_indices);

        // nullity staircase: first differences non-decreasing and bounded by the corank
        std::size_t prev_nu = 0;
        std::size_t prev_step = 0;
        for (std::size_t deg = 0; deg <= (p.dim() - 1) / 2; ++deg) {
            const std::size_t nu = p.dim() * (deg + 1) - rank(convolution_matrix(p, deg));
            const std::size_t step = nu - prev_nu;
            CHECK(step >= prev_step);
            CHECK(step <= p.dim() - an.generic_rank);
            prev_nu = nu;
            prev_step = step;
        }
    }
}
