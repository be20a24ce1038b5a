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

#include <veronese/formcalc.hpp>
#include <veronese/pencil.hpp>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace veronese {

/// [e_i, e_j] = sum_k c_ij^k e_k, stored for i < j (0-based); the rest is implied by antisymmetry.
class StructureConstants {
public:
    StructureConstants() = default;
    explicit StructureConstants(std::size_t dim, std::vector<std::string> labels = {});

    std::size_t dim() const noexcept { return m_dim; }
    const std::vector<std::string>& labels() const noexcept { return m_labels; }
    const std::map<std::array<std::size_t, 3>, Scalar>& entries() const noexcept { return m_entries; }

    /// Sets c_ij^k (and implicitly c_ji^k = -c_ij^k). Throws on i == j or out-of-range indices.
    void set(std::size_t i, std::size_t j, std::size_t k, const Scalar& value);
    Scalar operator()(std::size_t i, std::size_t j, std::size_t k) const;

    /// Polynomial variables named by the labels, or x1..xn.
    VarNames vars() const;

private:
    std::size_t m_dim = 0;
    std::vector<std::string> m_labels;
    std::map<std::array<std::size_t, 3>, Scalar> m_entries;
};

struct JacobiWitness {
    std::array<std::size_t, 4> indices{}; ///< (i, j, k, l), 0-based
    Scalar value;
};

/// First quadruple violating the Jacobi identity, if any.
std::optional<JacobiWitness> jacobi_violation(const StructureConstants& sc);
bool jacobi_sc(const StructureConstants& sc);

/// Basis of sl(n): H_i = E_ii - E_{i+1,i+1} (i = 1..n-1), then E_ij for i < j, then E_ij for
/// i > j, both in lexicographic order. For n = 2 this is (h, e, f).
StructureConstants sl_structure(std::size_t n);
Mat sl_basis_matrix(std::size_t n, std::size_t index);
/// Gram matrix tr(e_k e_l) of the sl(n) basis.
Mat trace_form_gram(std::size_t n);

/// c1(x) = sum_{i<j} c_ij^k x_k d_i ^ d_j.
PolyMultiVec lie_poisson_bivector(const StructureConstants& sc);

struct TranslationPair {
    StructureConstants sc;
    Vec a;
    PolyMultiVec c1;
    PolyMultiVec c2; ///< c1 frozen at a
};

/// Throws DependentPair when c1 vanishes, JacobiFails when the constants are not a Lie
/// algebra and ZeroShift when c(a) = 0.
/// Throws DependentPair for an abelian table and JacobiFails with a 1-based witness quadruple.
void require_lie_algebra(const StructureConstants& sc);
TranslationPair translation_pair(const StructureConstants& sc, const Vec& a);

struct CasimirSet {
    std::vector<MultiPoly> polys;
    std::vector<std::size_t> exponents; ///< m_j = deg g_j - 1
};

/// g_j = tr X(x)^{j+1}, j = 1..n-1, where X(x) corresponds to x through the trace form.
CasimirSet casimirs_sl(std::size_t n);
/// User-supplied invariants; each must be homogeneous of degree at least 1.
CasimirSet casimir_set(std::vector<MultiPoly> polys);

struct CasimirCertificate {
    bool ok = false;
    bool sampled_only = false;
};

/// c1(x) dg(x) = 0 as a polynomial identity when every degree is at most 8, otherwise at 20
/// seeded rational points.
CasimirCertificate certify_casimirs(const StructureConstants& sc, const CasimirSet& cs, std::uint64_t seed);

/// g_j(x + t a) = sum_i t^i g_j^i(a, x). coeffs[j][i] for i = 0..m_j+1.
struct TaylorTable {
    std::vector<std::vector<MultiPoly>> coeffs;
    std::vector<std::size_t> exponents;
};

TaylorTable taylor_table(const CasimirSet& cs, const Vec& a);

/// Rank of {dg_j^i(x) : i <= m_j}.
std::size_t differential_rank(const TaylorTable& tt, const Vec& x);
bool independence_check(const TaylorTable& tt, const Vec& x);

/// All brackets dF^T (l1 c1(x) + l2 c2) dG between table entries vanish at every sample.
bool involutivity_check(const TaylorTable& tt, const TranslationPair& pair, const Vec& x,
                        const std::vector<Lambda>& samples);

/// alpha_j = sum_{i <= m_j} l1^{m_j - i} l2^i dg_j^i(x).
std::vector<Vec> web_generators(const TaylorTable& tt, const Lambda& lambda, const Vec& x);

struct TranslationReport {
    PencilAnalysis analysis;
    std::vector<std::size_t> exponents;
    bool type_matches = false;       ///< minimal indices = exponents
    bool exponent_sum = false;       ///< sum m_j = (dim - r) / 2
    std::size_t differentials = 0;   ///< rank of the differential family
    std::size_t expected_differentials = 0; ///< (dim + r) / 2
    bool coframe = false;            ///< differentials independent
    bool involutive = false;
    bool generators_in_kernel = false;
    bool casimirs_certified = false;
    bool casimirs_sampled_only = false;

    bool ok() const noexcept
    {
        return analysis.complete && type_matches && exponent_sum && coframe && involutive && generators_in_kernel &&
               casimirs_certified;
    }
};

/// Throws IncompletePoint when the pencil at x has a Jordan part.
TranslationReport verify_translation(const StructureConstants& sc, const CasimirSet& cs, const Vec& a, const Vec& x,
                                 std::uint64_t seed = 1);

struct Witness {
    Vec a;
    Vec x;
    std::size_t attempts = 0;
};

/// Draws (a, x) from a seeded rational sequence and returns the first pair with c(a) != 0
/// whose pencil at x is complete. Throws VerificationFailed after max_attempts.
Witness find_generic_witness(const StructureConstants& sc, std::uint64_t seed, std::size_t max_attempts = 64);

/// Seeded rational sequence shared by the witness search and sampled certifications.
class RationalSequence {
public:
    explicit RationalSequence(std::uint64_t seed);
    Scalar next(long span = 5, long max_den = 3);
    Vec vector(std::size_t n, long span = 5, long max_den = 3);

private:
    std::mt19937_64 m_engine;
};

} // namespace veronese
