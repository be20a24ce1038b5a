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
#include <veronese/fixtures.hpp>
#include <veronese/formcalc.hpp>
#include <veronese/webfilt.hpp>

#include <doctest.h>

using namespace veronese;
using veronese::testing::Rng;

namespace {

using Dims = std::vector<std::size_t>;

Subspace span_of(std::size_t n, std::initializer_list<std::size_t> coords)
{
    Mat m(0, n);
    for (auto c : coords) {
        Vec v(n);
        v[c] = 1;
        m.append_row(v);
    }
    return Subspace::span(m);
}

SkewPencil at_point(const BivectorPair& pr, const Vec& x)
{
    return SkewPencil(eval_bivector(pr.c1, x), eval_bivector(pr.c2, x));
}

// Curve after substituting (l1, l2) -> (a l1 + b l2, c l1 + d l2) and applying g to the coordinates.
VeroneseCurveData transformed(const VeroneseCurveData& curve, const Scalar& a, const Scalar& b, const Scalar& c,
                              const Scalar& d, const Mat& g)
{
    const VarNames v = make_vars({"l1", "l2"});
    const MultiPoly l1 = MultiPoly::variable(v, 0), l2 = MultiPoly::variable(v, 1);
    const MultiPoly m1 = a * l1 + b * l2, m2 = c * l1 + d * l2;
    const std::size_t n = curve.degree;
    VeroneseCurveData out = curve;
    out.coords = Mat(n + 1, curve.coords.cols());
    for (std::size_t col = 0; col < curve.coords.cols(); ++col) {
        MultiPoly f(v);
        for (std::size_t i = 0; i <= n; ++i) {
            f += curve.coords(i, col) * pow(m1, static_cast<unsigned>(n - i)) * pow(m2, static_cast<unsigned>(i));
        }
        for (std::size_t i = 0; i <= n; ++i) {
            out.coords(i, col) = f.coefficient(Exponent{static_cast<std::uint32_t>(n - i), static_cast<std::uint32_t>(i)});
        }
    }
    out.coords = out.coords * g;
    return out;
}

} // namespace

TEST_CASE("phi chain on named pencils")
{
    SUBCASE("two-block illustration")
    {
        const PhiChain ch = phi_chain(veronese::testing::illustration_pencil());
        CHECK(ch.dims() == Dims{4, 3, 1});
        CHECK(ch.chain[0] == Subspace::full(4));
        CHECK(ch.chain[1] == span_of(4, {1, 2, 3}));
        CHECK(ch.chain[2] == span_of(4, {1}));
        CHECK(ch.stabilized_at == 2);
        CHECK(verify_phi_chain(ch, {0, 1}));
    }
    SUBCASE("single block of index 1")
    {
        const PhiChain ch = phi_chain(kronecker_block(1));
        CHECK(ch.dims() == Dims{3, 3, 1});
        CHECK(ch.chain.back() == span_of(3, {0}));
    }
    SUBCASE("blocks {0,1}")
    {
        CHECK(phi_chain(canonical_pencil({0, 1})).dims() == Dims{4, 3, 1});
    }
    SUBCASE("blocks {1,2} after a random congruence")
    {
        Rng rng(6);
        const SkewPencil p = veronese::testing::disguise(rng, veronese::testing::blocks_for({1, 2}));
        const PhiChain ch = phi_chain(p);
        CHECK(ch.dims() == Dims{8, 8, 6, 3});
        CHECK(verify_phi_chain(ch, {1, 2}));
        CHECK(ch.chain.back() == analyze(p).bilagrangian);
    }
    SUBCASE("regular pencil: Phi is constant")
    {
        const Mat j{{0, 1}, {-1, 0}};
        CHECK(phi_chain(SkewPencil(j, j * Scalar(5))).dims() == Dims{2});
    }
}

TEST_CASE("verify_phi_chain negative controls")
{
    const PhiChain good = phi_chain(veronese::testing::illustration_pencil());
    PhiChain dropped = good;
    dropped.chain.erase(dropped.chain.begin() + 1);
    dropped.stabilized_at = 1;
    CHECK_FALSE(verify_phi_chain(dropped, {0, 1}));
    CHECK_FALSE(verify_phi_chain(good, {1, 2}));
    PhiChain swapped = good;
    swapped.chain[1] = span_of(4, {0, 2, 3}); // right dimension, misses p
    CHECK_FALSE(verify_phi_chain(swapped, {0, 1}));
    try {
        verify_phi_chain(good, {1, 1});
        FAIL("expected NonSimple");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonSimple);
    }
}

TEST_CASE("isotypic filtration")
{
    const SkewPencil ill = veronese::testing::illustration_pencil();
    const IsotypicFiltration f = isotypic_filtration(ill, phi_chain(ill));
    CHECK(f.dims() == Dims{0, 1, 3});
    CHECK(f.levels[1] == span_of(4, {0}));
    CHECK(f.levels[2] == span_of(4, {0, 2, 3}));
    CHECK(f.jumps == Dims{0, 1});

    const SkewPencil one = kronecker_block(1);
    CHECK(isotypic_filtration(one, phi_chain(one)).dims() == Dims{0, 2});

    Rng rng(13);
    const SkewPencil p = veronese::testing::disguise(rng, veronese::testing::blocks_for({2, 1}));
    CHECK(isotypic_filtration(p, phi_chain(p)).dims() == Dims{0, 2, 5});

    const SkewPencil twin = canonical_pencil({1, 1});
    CHECK_THROWS_AS(isotypic_filtration(twin, phi_chain(twin)), Error);
}

TEST_CASE("graded curves")
{
    SUBCASE("canonical block of index 1 sweeps the conic of (l2, -l1)")
    {
        const SkewPencil one = kronecker_block(1);
        const auto curves = graded_curves(one, isotypic_filtration(one, phi_chain(one)));
        REQUIRE(curves.size() == 1);
        const VeroneseCurveData& c = curves[0];
        CHECK(c.degree == 1);
        CHECK(c.quotient_dim == 2);
        CHECK(rank(c.coords) == 2);
        for (auto [l1, l2] : std::vector<std::pair<int, int>>{{1, 0}, {0, 1}, {3, -2}}) {
            const Vec pt = c.point(Lambda(l1, l2));
            // coordinates are in (q1*, q2*); the kernel of l1 p^q1 + l2 p^q2 is spanned by l2 q1* - l1 q2*
            CHECK(pt[0] * Scalar(-l1) - pt[1] * Scalar(l2) == 0);
            CHECK_FALSE(is_zero(pt));
        }
        CHECK(veronese_check(c));
    }
    SUBCASE("two-block illustration")
    {
        const SkewPencil ill = veronese::testing::illustration_pencil();
        const auto curves = graded_curves(ill, isotypic_filtration(ill, phi_chain(ill)));
        REQUIRE(curves.size() == 2);
        CHECK(curves[0].degree == 0);
        CHECK(curves[0].quotient_dim == 1);
        CHECK(curves[1].degree == 1);
        CHECK(curves[1].quotient_dim == 2);
        CHECK(rank(curves[1].coords) == 2);
        CHECK(veronese_check(curves[0]));
        CHECK(veronese_check(curves[1]));
    }
    SUBCASE("blocks {1,2}")
    {
        Rng rng(14);
        const SkewPencil p = veronese::testing::disguise(rng, veronese::testing::blocks_for({1, 2}));
        const auto curves = graded_curves(p, isotypic_filtration(p, phi_chain(p)));
        REQUIRE(curves.size() == 2);
        CHECK(curves[0].degree == 1);
        CHECK(curves[1].degree == 2);
        CHECK(curves[0].quotient_dim == 2);
        CHECK(curves[1].quotient_dim == 3);
    }
}

TEST_CASE("veronese_check")
{
    VeroneseCurveData moment;
    moment.degree = 2;
    moment.quotient_dim = 3;
    moment.coords = Mat::identity(3);
    CHECK(veronese_check(moment));

    VeroneseCurveData flat = moment;
    flat.coords = Mat{{1, 0, 0}, {0, 1, 0}, {0, 1, 0}};
    CHECK_FALSE(veronese_check(flat));

    VeroneseCurveData low = moment;
    low.coords = Mat{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
    CHECK_FALSE(veronese_check(low));

    Rng rng(15);
    for (int trial = 0; trial < 10; ++trial) {
        Scalar a, b, c, d;
        do {
            a = rng.uniform(-3, 3);
            b = rng.uniform(-3, 3);
            c = rng.uniform(-3, 3);
            d = rng.uniform(-3, 3);
        } while (a * d - b * c == 0);
        const Mat g = rng.invertible(3);
        CHECK(veronese_check(transformed(moment, a, b, c, d, g)));
        CHECK_FALSE(veronese_check(transformed(flat, a, b, c, d, g)));
    }
}

TEST_CASE("infinitesimal webs")
{
    SUBCASE("two-block illustration")
    {
        const InfinitesimalWeb w = build_infinitesimal_web(veronese::testing::illustration_pencil());
        CHECK(w.analysis.minimal_indices == Dims{0, 1});
        CHECK(w.web_dim == 3);
        CHECK(w.verdict.ok());
    }
    SUBCASE("codimension-one web pair at generic points")
    {
        const BivectorPair pr = codim1_web_pair();
        Rng rng(16);
        for (int trial = 0; trial < 5; ++trial) {
            const Vec x{rng.rational(), rng.rational(), rng.rational(), rng.rational()};
            const InfinitesimalWeb w = build_infinitesimal_web(at_point(pr, x));
            CHECK(w.analysis.minimal_indices == Dims{0, 1});
            CHECK(w.verdict.ok());
        }
    }
    SUBCASE("codimension-two family at generic points")
    {
        const BivectorPair pr = codim2_web_pair();
        Rng rng(17);
        for (int trial = 0; trial < 5; ++trial) {
            Vec x(8);
            for (auto& c : x) c = rng.rational();
            const InfinitesimalWeb w = build_infinitesimal_web(at_point(pr, x));
            CHECK(w.analysis.minimal_indices == Dims{1, 2});
            CHECK(w.verdict.ok());
        }
    }
    SUBCASE("rejections")
    {
        const BivectorPair pr = nonregular_pair();
        try {
            build_infinitesimal_web(at_point(pr, Vec{0, 0, 1, 0, 0, 0}));
            FAIL("expected NonSimple");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NonSimple);
        }
        CHECK(build_infinitesimal_web(at_point(pr, Vec{0, 0, 0, 0, 0, 0})).verdict.ok());
        const Mat j{{0, 1}, {-1, 0}};
        try {
            build_infinitesimal_web(SkewPencil(j, Scalar(2) * j));
            FAIL("expected NotComplete");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NotComplete);
        }
    }
}

TEST_CASE("web invariants on random simple pencils")
{
    Rng rng(2718);
    for (int trial = 0; trial < 15; ++trial) {
        const auto idx = veronese::testing::sorted(veronese::testing::random_indices(rng, 3, 11, true));
        const SkewPencil p = veronese::testing::disguise(rng, veronese::testing::blocks_for(idx));
        const PhiChain ch = phi_chain(p);
        CHECK(verify_phi_chain(ch, idx));
        CHECK(ch.chain.back() == analyze(p).bilagrangian);

        const InfinitesimalWeb w = build_infinitesimal_web(p);
        CHECK(w.verdict.ok());
        for (const auto& c : w.curves) CHECK(veronese_check(c));

        CHECK(phi_chain(congruence(p, rng.invertible(p.dim()))).dims() == ch.dims());
        Scalar a, b, c, d;
        do {
            a = rng.uniform(-2, 2);
            b = rng.uniform(-2, 2);
            c = rng.uniform(-2, 2);
            d = rng.uniform(-2, 2);
        } while (a * d - b * c == 0);
        CHECK(phi_chain(rebase(p, a, b, c, d)).chain == ch.chain);
    }
}
