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
#include <veronese/mat.hpp>
#include <veronese/multipoly.hpp>
#include <veronese/scalar.hpp>
#include <veronese/subspace.hpp>

#include <doctest.h>

#include <functional>

using namespace veronese;
using veronese::testing::Rng;

namespace {

// Cofactor expansion along the first row.
Scalar laplace_det(const Mat& m)
{
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Scalar acc = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (sgn(m(0, c)) == 0) continue;
        Mat minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            for (std::size_t j = 0, jj = 0; j < n; ++j) {
                if (j != c) minor(i - 1, jj++) = m(i, j);
            }
        }
        const Scalar term = m(0, c) * laplace_det(minor);
        if (c % 2 == 0) acc += term;
        else acc -= term;
    }
    return acc;
}

// Largest k with a nonzero k x k minor.
std::size_t minor_rank(const Mat& m)
{
    const std::size_t kmax = std::min(m.rows(), m.cols());
    for (std::size_t k = kmax; k > 0; --k) {
        std::vector<std::size_t> rows(k), cols(k);
        bool found = false;
        std::function<void(std::size_t, std::size_t)> pick_cols;
        std::function<void(std::size_t, std::size_t)> pick_rows = [&](std::size_t at, std::size_t from) {
            if (found) return;
            if (at == k) {
                pick_cols(0, 0);
                return;
            }
            for (std::size_t r = from; r < m.rows(); ++r) {
                rows[at] = r;
                pick_rows(at + 1, r + 1);
            }
        };
        pick_cols = [&](std::size_t at, std::size_t from) {
            if (found) return;
            if (at == k) {
                Mat sub(k, k);
                for (std::size_t i = 0; i < k; ++i) {
                    for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
                }
                if (sgn(laplace_det(sub)) != 0) found = true;
                return;
            }
            for (std::size_t c = from; c < m.cols(); ++c) {
                cols[at] = c;
                pick_cols(at + 1, c + 1);
            }
        };
        pick_rows(0, 0);
        if (found) return k;
    }
    return 0;
}

Subspace random_subspace(Rng& rng, std::size_t ambient)
{
    const auto k = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(ambient)));
    return Subspace::span(rng.matrix(k, ambient, 2, 2));
}

Vec e(std::size_t n, std::size_t i)
{
    Vec v(n);
    v[i] = 1;
    return v;
}

} // namespace

TEST_CASE("scalar parsing and formatting")
{
    CHECK(parse_scalar("3/6") == Scalar(1, 2));
    CHECK(parse_scalar("-7") == Scalar(-7));
    CHECK(to_string(parse_scalar("-4/6")) == "-2/3");
    CHECK(to_string(Scalar(0)) == "0");
    CHECK_THROWS_AS(parse_scalar("1/0"), Error);
    CHECK_THROWS_AS(parse_scalar("abc"), Error);
    CHECK(parse_scalar_list("1, -2/4,3") == Vec{1, Scalar(-1, 2), 3});
}

TEST_CASE("scalar arithmetic agrees with integer cross-multiplication")
{
    Rng rng(1);
    for (int trial = 0; trial < 200; ++trial) {
        const long a = rng.uniform(-50, 50), b = rng.uniform(1, 40);
        const long c = rng.uniform(-50, 50), d = rng.uniform(1, 40);
        Scalar x(a, b), y(c, d);
        x.canonicalize();
        y.canonicalize();
        const Scalar s = x + y;
        // s = (ad + cb) / bd  <=>  num(s) * bd == den(s) * (ad + cb)
        CHECK(s.get_num() * (b * d) == s.get_den() * (a * d + c * b));
        CHECK(s.get_den() > 0);
        CHECK(gcd(s.get_num(), s.get_den()) == 1);
        const Scalar p = x * y;
        CHECK(p.get_num() * (b * d) == p.get_den() * (a * c));
    }
}

TEST_CASE("rref")
{
    const RrefResult id = rref(Mat::identity(3));
    CHECK(id.reduced == Mat::identity(3));
    CHECK(id.rank == 3);

    const RrefResult dep = rref(Mat{{1, 2}, {2, 4}});
    CHECK(dep.reduced == Mat{{1, 2}, {0, 0}});
    CHECK(dep.rank == 1);

    const RrefResult frac = rref(Mat{{2, 1, 0}, {0, 3, 1}});
    CHECK(frac.reduced == Mat{{1, 0, Scalar(-1, 6)}, {0, 1, Scalar(1, 3)}});

    Rng rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        Mat m = rng.matrix(5, 7, 3, 3);
        // force some rank deficiency in a third of the trials
        if (trial % 3 == 0) {
            for (std::size_t j = 0; j < 7; ++j) m(4, j) = m(0, j) * 2 - m(1, j);
        }
        if (trial % 3 == 1) {
            for (std::size_t j = 0; j < 7; ++j) {
                m(3, j) = m(0, j) + m(1, j);
                m(4, j) = m(2, j) * Scalar(1, 2);
            }
        }
        CHECK(rank(m) == minor_rank(m));
        const RrefResult r = rref(m);
        CHECK(r.rank == minor_rank(m));
        CHECK(rref(r.reduced).reduced == r.reduced);
    }
}

TEST_CASE("determinant, solve, inverse")
{
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const Mat m = rng.matrix(4, 4, 4, 2);
        CHECK(determinant(m) == laplace_det(m));
    }
    const Mat m = rng.invertible(5);
    CHECK(inverse(m) * m == Mat::identity(5));
    Mat x;
    CHECK_FALSE(solve(Mat{{1, 1}, {1, 1}}, Mat{{1}, {2}}, x));
    CHECK(solve(Mat{{1, 1}, {1, -1}}, Mat{{3}, {1}}, x));
    CHECK(x == Mat{{2}, {1}});
}

TEST_CASE("nullspace")
{
    CHECK(nullspace(Mat(2, 2)) == Subspace::full(2));
    CHECK(nullspace(Mat::identity(3)) == Subspace::zero(3));
    const Subspace k = nullspace(Mat{{1, 1, 0}});
    CHECK(k.dim() == 2);
    CHECK(k.contains(Vec{1, -1, 0}));
    CHECK(k.contains(Vec{0, 0, 1}));
    CHECK_FALSE(k.contains(Vec{1, 0, 0}));

    Rng rng(21);
    for (int trial = 0; trial < 20; ++trial) {
        const Mat m = rng.matrix(4, 6, 2);
        const Subspace ns = nullspace(m);
        CHECK(ns.dim() == 6 - rank(m));
        for (std::size_t r = 0; r < ns.dim(); ++r) CHECK(is_zero(m * ns.basis().row_vec(r)));
    }
}

TEST_CASE("subspace sum, intersection, annihilator")
{
    const Subspace e1 = Subspace::span(Mat{{1, 0, 0}});
    const Subspace e2 = Subspace::span(Mat{{0, 1, 0}});
    CHECK(subspace_sum(e1, e2) == Subspace::span(Mat{{1, 0, 0}, {0, 1, 0}}));
    CHECK(subspace_sum(e1, e1) == e1);
    CHECK(subspace_sum(Subspace::span(Mat{{1, 1}}), Subspace::span(Mat{{1, -1}})) == Subspace::full(2));

    const Subspace e12 = Subspace::span(Mat{{1, 0, 0}, {0, 1, 0}});
    const Subspace e23 = Subspace::span(Mat{{0, 1, 0}, {0, 0, 1}});
    CHECK(subspace_intersect(e12, e12) == e12);
    CHECK(subspace_intersect(e12, e23) == e2);

    CHECK(annihilator(Subspace::zero(3)) == Subspace::full(3));
    CHECK(annihilator(Subspace::full(3)) == Subspace::zero(3));
    const Subspace ann = annihilator(Subspace::span(Mat{{1, 1, 0}}));
    CHECK(ann.dim() == 2);
    for (std::size_t r = 0; r < 2; ++r) CHECK(dot(ann.basis().row_vec(r), Vec{1, 1, 0}) == 0);

    CHECK_THROWS_AS(subspace_sum(e1, Subspace::full(2)), Error);
    CHECK_THROWS_AS(subspace_intersect(e1, Subspace::full(2)), Error);

    Rng rng(44);
    for (int trial = 0; trial < 40; ++trial) {
        const Subspace a = random_subspace(rng, 6);
        const Subspace b = random_subspace(rng, 6);
        const Subspace s = subspace_sum(a, b);
        const Subspace i = subspace_intersect(a, b);
        CHECK(a.dim() + b.dim() == s.dim() + i.dim());
        CHECK(s.contains(a));
        CHECK(a.contains(i));
        CHECK(b.contains(i));
        CHECK(annihilator(annihilator(a)) == a);
        CHECK(annihilator(a).dim() == 6 - a.dim());
    }
}

TEST_CASE("subspace representation is canonical")
{
    Rng rng(5);
    const Mat base = rng.matrix(3, 6, 3);
    const Subspace s = Subspace::span(base);
    // same row space, different generators
    const Mat mixed = rng.invertible(3) * base;
    CHECK(Subspace::span(mixed) == s);
    for (std::size_t r = 0; r < s.dim(); ++r) {
        CHECK(s.basis()(r, s.pivots()[r]) == 1);
        for (std::size_t u = 0; u < s.dim(); ++u) {
            if (u != r) CHECK(sgn(s.basis()(u, s.pivots()[r])) == 0);
        }
    }
    const Vec w = s.basis().row_vec(0);
    CHECK(s.coordinates(w) == Vec{1, 0, 0});
    CHECK(is_zero(s.reduce(w)));
    Vec combo = s.basis().row_vec(1);
    for (std::size_t j = 0; j < 6; ++j) combo[j] = combo[j] * 2 - s.basis()(2, j);
    CHECK(s.coordinates(combo) == Vec{0, 2, -1});
    CHECK(Subspace::span(Mat{{1, 0, 0}}).reduce(e(3, 0) ) == Vec(3));
    CHECK(Subspace::span(Mat{{1, 0, 0}}).reduce(e(3, 1)) == e(3, 1));
}

TEST_CASE("image of a matrix is its column space")
{
    const Mat m{{1, 0}, {1, 0}, {0, 0}};
    CHECK(Subspace::image(m) == Subspace::span(Mat{{1, 1, 0}}));
    const Mat p = veronese::testing::illustration_pencil().a();
    CHECK(Subspace::image(p) == Subspace::span(Mat{{0, 1, 0, 0}, {0, 0, 1, 0}}));
}

TEST_CASE("multivariate polynomials")
{
    const VarNames v = make_vars({"x", "y", "z"});
    const MultiPoly x = MultiPoly::variable(v, 0);
    const MultiPoly y = MultiPoly::variable(v, 1);
    const MultiPoly z = MultiPoly::variable(v, 2);

    CHECK(parse_poly("x*y - 3/2*z^2 + 1", v) == x * y - Scalar(3, 2) * pow(z, 2) + MultiPoly::constant(v, 1));
    CHECK(parse_poly("(x+y)^2", v) == x * x + Scalar(2) * x * y + y * y);
    CHECK(parse_poly("x - x", v).is_zero());
    CHECK_THROWS_AS(parse_poly("2(x+1)", v), Error);
    CHECK(parse_poly("2*(x+1)", v) == Scalar(2) * x + MultiPoly::constant(v, 2));
    CHECK_THROWS_AS(parse_poly("x + w", v), Error);
    CHECK_THROWS_AS(parse_poly("x + ", v), Error);

    const MultiPoly p = parse_poly("x^2*y + 3*x*z - y + 5", v);
    CHECK(p.total_degree() == 3);
    CHECK_FALSE(p.is_homogeneous());
    CHECK(p.homogeneous_part(2) == Scalar(3) * x * z);
    CHECK(p.derivative(0) == Scalar(2) * x * y + Scalar(3) * z);
    CHECK(p.evaluate(Vec{1, 2, 3}) == 2 + 9 - 2 + 5);
    CHECK(gradient_at(p, Vec{1, 2, 3}) == Vec{13, 0, 3});

    // x -> y + z, y -> x, z -> 2
    const MultiPoly c = p.compose({y + z, x, MultiPoly::constant(v, 2)});
    CHECK(c == (y + z) * (y + z) * x + Scalar(6) * (y + z) - x + MultiPoly::constant(v, 5));

    CHECK(parse_poly(p.to_string(), v) == p);
    CHECK(MultiPoly(v).total_degree() == -1);
}

TEST_CASE("polynomial arithmetic is a commutative ring on random inputs")
{
    const VarNames v = indexed_vars(3);
    Rng rng(77);
    auto random_poly = [&]() {
        MultiPoly p(v);
        for (int t = 0; t < 4; ++t) {
            p.add_term(Exponent{static_cast<std::uint32_t>(rng.uniform(0, 2)), static_cast<std::uint32_t>(rng.uniform(0, 2)),
                                static_cast<std::uint32_t>(rng.uniform(0, 2))},
                       rng.rational());
        }
        return p;
    };
    for (int trial = 0; trial < 20; ++trial) {
        const MultiPoly a = random_poly(), b = random_poly(), c = random_poly();
        CHECK(a * b == b * a);
        CHECK((a + b) * c == a * c + b * c);
        const Vec pt{rng.rational(), rng.rational(), rng.rational()};
        CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
        // product rule
        CHECK((a * b).derivative(1) == a.derivative(1) * b + a * b.derivative(1));
    }
}
