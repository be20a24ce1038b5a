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

#pragma once

// Built-in example data: the pencils, bivector pairs and 1-forms of the worked examples.

#include <veronese/formcalc.hpp>
#include <veronese/pencil.hpp>

#include <vector>

namespace veronese {

struct BivectorPair {
    PolyMultiVec c1;
    PolyMultiVec c2;
};

/// l1*c1 + l2*c2
PolyMultiVec combination(const BivectorPair& pair, const Lambda& lambda);
/// The constant pencil (c1(x), c2(x)).
SkewPencil pencil_at(const BivectorPair& pair, const Vec& x);

/// V = span{e, p, q1, q2}, c1 = p^q1, c2 = p^q2. Type (0,1).
SkewPencil two_block_pencil();

/// On R^4(p, x, y, z): dp ^ (l1 v1 + l2 v2) with v1 = d/dx, v2 = d/dy + x d/dz.
BivectorPair codim1_web_pair();
/// On R^3(x, y, z): alpha1 = x dy - dz.
PolyForm codim1_alpha1();
/// alpha2 = l1 dx + l2 dy.
PolyForm codim1_alpha2(const Lambda& lambda);

/// On R^8(p1, p2, p3, x, y, z, s, t), transcribed from the displayed family
/// dp1^(l2 dx - l1 ds) + dp2^(l2 ds - l1 v) + dp3^(l2 dz - l1 dt), v = dy + x dz + s dt.
BivectorPair codim2_web_pair();
/// On R^5(x, y, z, s, t): alpha1 = l1 (x dy - dz) + l2 (s dy - dt).
PolyForm codim2_alpha1(const Lambda& lambda);
/// alpha2 = l1^2 dx + l1 l2 ds + l2^2 dy.
PolyForm codim2_alpha2(const Lambda& lambda);
/// {x dy - dz, s dy - dt}
std::vector<PolyForm> codim2_f1_generators();

/// On R^6(p1, p2, q1, q2, q3, q4): c1 = dp1^dq1 + dp2^dq2, c2 = dp1^(dq2 + q1 dq3) + dp2^dq4.
/// Two blocks of index 1 off {q1 = 0}, indices (0, 2) on it.
BivectorPair nonregular_pair();

} // namespace veronese
