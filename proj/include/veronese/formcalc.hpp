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

#include <veronese/mat.hpp>
#include <veronese/multipoly.hpp>

#include <map>
#include <optional>
#include <vector>

namespace veronese {

enum class Variance {
    Covariant,     ///< differential forms
    Contravariant, ///< multivector fields
};

/// Antisymmetric tensor field with polynomial coefficients. Only strictly increasing
/// index tuples are stored and zero components are dropped.
template <Variance V>
class AntisymTensor {
public:
    using Index = std::vector<std::size_t>;
    using Components = std::map<Index, MultiPoly>;

    AntisymTensor() = default;
    AntisymTensor(VarNames vars, std::size_t degree) : m_vars(std::move(vars)), m_degree(degree) {}

    const VarNames& vars() const noexcept { return m_vars; }
    std::size_t n_vars() const noexcept { return m_vars ? m_vars->size() : 0; }
    std::size_t degree() const noexcept { return m_degree; }
    const Components& components() const noexcept { return m_components; }
    bool is_zero() const noexcept { return m_components.empty(); }

    /// Adds `coefficient` to the component at `index` (any order, sign of the sorting
    /// permutation applied; repeated indices contribute nothing).
    void add(Index index, const MultiPoly& coefficient);

    /// Component with antisymmetric sign for an arbitrary index order.
    MultiPoly get(Index index) const;

    AntisymTensor& operator+=(const AntisymTensor& other);
    AntisymTensor& operator-=(const AntisymTensor& other);
    AntisymTensor& operator*=(const MultiPoly& f);
    AntisymTensor& operator*=(const Scalar& c);

    friend bool operator==(const AntisymTensor& a, const AntisymTensor& b)
    {
        return a.m_degree == b.m_degree && same_vars(a.m_vars, b.m_vars) && a.m_components == b.m_components;
    }

private:
    void check_compatible(const AntisymTensor& other) const;

    VarNames m_vars;
    std::size_t m_degree = 0;
    Components m_components;
};

using PolyForm = AntisymTensor<Variance::Covariant>;
using PolyMultiVec = AntisymTensor<Variance::Contravariant>;

template <Variance V>
AntisymTensor<V> operator+(AntisymTensor<V> a, const AntisymTensor<V>& b) { return a += b; }
template <Variance V>
AntisymTensor<V> operator-(AntisymTensor<V> a, const AntisymTensor<V>& b) { return a -= b; }
template <Variance V>
AntisymTensor<V> operator*(const MultiPoly& f, AntisymTensor<V> a) { return a *= f; }
template <Variance V>
AntisymTensor<V> operator*(const Scalar& c, AntisymTensor<V> a) { return a *= c; }

/// Sign of the permutation sorting `index`, or 0 if an index repeats. Sorts in place.
int sort_with_sign(std::vector<std::size_t>& index);

/// dx_i (0-based i).
PolyForm coordinate_form(const VarNames& vars, std::size_t i);
/// d/dx_i.
PolyMultiVec coordinate_field(const VarNames& vars, std::size_t i);
/// Degree-0 tensor holding the function f.
template <Variance V>
AntisymTensor<V> function_tensor(const MultiPoly& f);

/// Graded-commutative exterior product; a result degree beyond n_vars is the zero tensor.
template <Variance V>
AntisymTensor<V> wedge(const AntisymTensor<V>& a, const AntisymTensor<V>& b);

PolyForm exterior_d(const PolyForm& a);

/// Schouten bracket of two bivectors:
///   [P,Q]^{ijk} = sum_l (P^{li} d_l Q^{jk} + Q^{li} d_l P^{jk}) + cyclic in (i,j,k).
/// Symmetric in P and Q; [P,P] vanishes exactly when P is Poisson.
PolyMultiVec schouten(const PolyMultiVec& p, const PolyMultiVec& q);

bool jacobi_check(const PolyMultiVec& p);

struct PairVerdict {
    bool first_poisson = false;
    bool second_poisson = false;
    bool compatible = false;
    PolyMultiVec first_bracket;  ///< [P,P]
    PolyMultiVec second_bracket; ///< [Q,Q]
    PolyMultiVec mixed_bracket;  ///< [P,Q]

    bool ok() const noexcept { return first_poisson && second_poisson && compatible; }
};

PairVerdict pair_report(const PolyMultiVec& p, const PolyMultiVec& q);
bool pair_check(const PolyMultiVec& p, const PolyMultiVec& q);

/// Skew matrix (P^{ij}(x)).
Mat eval_bivector(const PolyMultiVec& p, const Vec& point);
/// Constant bivector whose components are the upper triangle of a skew matrix.
PolyMultiVec bivector_from_matrix(const VarNames& vars, const Mat& m);

/// Integrability of the Pfaffian system spanned by 1-forms: d(alpha_i) ^ alpha_1 ^ ... ^
/// alpha_s = 0 for every i, either identically or at `at`. Independence of the
/// generators is validated at `at`, or, without a point, at a fixed set of sample
/// points (error DependentGenerators when they are dependent at all of them).
bool frobenius_check(const std::vector<PolyForm>& generators, const std::optional<Vec>& at = std::nullopt);

/// Evaluates every component at a point; the result has constant components.
template <Variance V>
AntisymTensor<V> evaluate_at(const AntisymTensor<V>& t, const Vec& point);

} // namespace veronese
