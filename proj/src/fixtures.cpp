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

#include <veronese/fixtures.hpp>

namespace veronese {

namespace {

PolyMultiVec field(const VarNames& v, std::size_t i) { return coordinate_field(v, i); }
PolyForm form(const VarNames& v, std::size_t i) { return coordinate_form(v, i); }
MultiPoly var(const VarNames& v, std::size_t i) { return MultiPoly::variable(v, i); }

} // namespace

PolyMultiVec combination(const BivectorPair& pair, const Lambda& lambda)
{
    return lambda.l1() * pair.c1 + lambda.l2() * pair.c2;
}

SkewPencil pencil_at(const BivectorPair& pair, const Vec& x)
{
    return SkewPencil(eval_bivector(pair.c1, x), eval_bivector(pair.c2, x));
}

SkewPencil two_block_pencil()
{
    Mat a(4, 4);
    Mat b(4, 4);
    a(1, 2) = 1;
    a(2, 1) = -1;
    b(1, 3) = 1;
    b(3, 1) = -1;
    return SkewPencil(std::move(a), std::move(b));
}

BivectorPair codim1_web_pair()
{
    const VarNames v = make_vars({"p", "x", "y", "z"});
    const PolyMultiVec v1 = field(v, 1);
    const PolyMultiVec v2 = field(v, 2) + var(v, 1) * field(v, 3);
    return {wedge(field(v, 0), v1), wedge(field(v, 0), v2)};
}

PolyForm codim1_alpha1()
{
    const VarNames v = make_vars({"x", "y", "z"});
    return var(v, 0) * form(v, 1) - form(v, 2);
}

PolyForm codim1_alpha2(const Lambda& lambda)
{
    const VarNames v = make_vars({"x", "y", "z"});
    return lambda.l1() * form(v, 0) + lambda.l2() * form(v, 1);
}

BivectorPair codim2_web_pair()
{
    const VarNames v = make_vars({"p1", "p2", "p3", "x", "y", "z", "s", "t"});
    enum { p1, p2, p3, x, y, z, s, t };
    const PolyMultiVec vv = field(v, y) + var(v, x) * field(v, z) + var(v, s) * field(v, t);
    // l1 part: -dp1^ds - dp2^v - dp3^dt; l2 part: dp1^dx + dp2^ds + dp3^dz
    BivectorPair out;
    out.c1 = Scalar(-1) * (wedge(field(v, p1), field(v, s)) + wedge(field(v, p2), vv) + wedge(field(v, p3), field(v, t)));
    out.c2 = wedge(field(v, p1), field(v, x)) + wedge(field(v, p2), field(v, s)) + wedge(field(v, p3), field(v, z));
    return out;
}

PolyForm codim2_alpha1(const Lambda& lambda)
{
    const VarNames v = make_vars({"x", "y", "z", "s", "t"});
    enum { x, y, z, s, t };
    const PolyForm first = var(v, x) * form(v, y) - form(v, z);
    const PolyForm second = var(v, s) * form(v, y) - form(v, t);
    return lambda.l1() * first + lambda.l2() * second;
}

PolyForm codim2_alpha2(const Lambda& lambda)
{
    const VarNames v = make_vars({"x", "y", "z", "s", "t"});
    enum { x, y, z, s, t };
    const Scalar& l1 = lambda.l1();
    const Scalar& l2 = lambda.l2();
    return (l1 * l1) * form(v, x) + (l1 * l2) * form(v, s) + (l2 * l2) * form(v, y);
}

std::vector<PolyForm> codim2_f1_generators()
{
    return {codim2_alpha1(Lambda(1, 0)), codim2_alpha1(Lambda(0, 1))};
}

BivectorPair nonregular_pair()
{
    const VarNames v = make_vars({"p1", "p2", "q1", "q2", "q3", "q4"});
    enum { p1, p2, q1, q2, q3, q4 };
    BivectorPair out;
    out.c1 = wedge(field(v, p1), field(v, q1)) + wedge(field(v, p2), field(v, q2));
    out.c2 = wedge(field(v, p1), field(v, q2) + var(v, q1) * field(v, q3)) + wedge(field(v, p2), field(v, q4));
    return out;
}

} // namespace veronese
