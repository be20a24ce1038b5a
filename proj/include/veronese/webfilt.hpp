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

#include <veronese/pencil.hpp>
#include <veronese/subspace.hpp>

#include <cstddef>
#include <vector>

namespace veronese {

/// Phi_0 = V, and Phi_i is the sum of the intersections of i distinct characteristic
/// subspaces image(l1 A + l2 B). Entries run up to the first index from which the chain is
/// constant, so chain.back() is the bilagrangian subspace L.
struct PhiChain {
    std::vector<Subspace> chain;
    std::size_t stabilized_at = 0;
    std::size_t parameters_used = 0;

    std::vector<std::size_t> dims() const;
};

PhiChain phi_chain(const SkewPencil& p);

/// Check the chain against dim Phi_i = sum_{n_l < i} n_l + sum_{n_l >= i} (2 n_l + 1), the
/// inclusions Phi_i >= Phi_{i+1} and stabilization exactly at n_k + 1.
/// Throws NonSimple when indices repeat.
bool verify_phi_chain(const PhiChain& chain, const std::vector<std::size_t>& indices);

/// 0 = F_0 < F_1 < ... < F_k = L^perp inside V*, with F_j = Phi_{n_{j+1}}^perp for j < k.
struct IsotypicFiltration {
    std::vector<Subspace> levels; ///< F_0 .. F_k
    std::vector<std::size_t> jumps; ///< n_1 < ... < n_k

    std::vector<std::size_t> dims() const;
};

IsotypicFiltration isotypic_filtration(const SkewPencil& p, const PhiChain& chain);

/// The curve l -> sum_i l1^{n-i} l2^i v_i of classes in A_j = F_j / F_{j-1}.
/// Classes are stored twice: as representatives in V* reduced modulo F_{j-1}, and as
/// coordinates (one row per v_i) in the canonical complement of F_{j-1} in F_j.
struct VeroneseCurveData {
    std::size_t level = 0;
    std::size_t degree = 0;
    std::size_t quotient_dim = 0;
    std::vector<Vec> representatives;
    Mat coords;

    Vec point(const Lambda& lambda) const; ///< coordinates of the curve point
};

std::vector<VeroneseCurveData> graded_curves(const SkewPencil& p, const IsotypicFiltration& filtration);

/// True iff the degree+1 coefficient classes are independent, v_0 and v_n are nonzero and
/// degree+1 distinct curve points are independent.
bool veronese_check(const VeroneseCurveData& curve);

struct WebVerdict {
    bool phi_dimensions = false;
    bool filtration_ranks = false; ///< dim F_j / F_{j-1} = n_j + 1
    bool induced_ranks = false;    ///< dim (F_j cap ker c_l) = j at every sampled l
    bool veronese = false;         ///< every level is a Veronese inclusion
    bool curve_points = false;     ///< curve points span (F_j cap ker c_l) + F_{j-1} modulo F_{j-1}

    bool ok() const noexcept { return phi_dimensions && filtration_ranks && induced_ranks && veronese && curve_points; }
};

struct InfinitesimalWeb {
    PencilAnalysis analysis;
    PhiChain chain;
    IsotypicFiltration filtration;
    std::vector<VeroneseCurveData> curves;
    std::size_t web_dim = 0; ///< dim V/L
    WebVerdict verdict;
};

/// Throws NotComplete or NonSimple when the pencil does not carry a web of distinct type.
InfinitesimalWeb build_infinitesimal_web(const SkewPencil& p);

} // namespace veronese
