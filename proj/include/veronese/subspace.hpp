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

#include <cstddef>
#include <span>

namespace veronese {

/// A linear subspace of Q^n held by its canonical RREF basis (rows). Two subspaces are
/// equal exactly when their basis matrices are identical.
class Subspace {
public:
    Subspace() = default;

    static Subspace zero(std::size_t ambient_dim);
    static Subspace full(std::size_t ambient_dim);
    /// Row space of `rows`.
    static Subspace span(const Mat& rows);
    static Subspace span(std::span<const Vec> vectors, std::size_t ambient_dim);
    /// Column space of `m`.
    static Subspace image(const Mat& m);

    std::size_t ambient_dim() const noexcept { return m_ambient; }
    std::size_t dim() const noexcept { return m_basis.rows(); }
    const Mat& basis() const noexcept { return m_basis; }
    const std::vector<std::size_t>& pivots() const noexcept { return m_pivots; }

    bool contains(std::span<const Scalar> v) const;
    bool contains(const Subspace& other) const;

    /// Canonical representative of v modulo this subspace: the pivot coordinates of
    /// the basis are eliminated.
    Vec reduce(std::span<const Scalar> v) const;

    /// Coordinates of a member v in the RREF basis (the entries of v at the pivots).
    Vec coordinates(std::span<const Scalar> v) const;

    /// { v in this : xi . v = 0 for every xi in covectors }.
    Subspace restrict_to_kernel_of(const Subspace& covectors) const;

    friend bool operator==(const Subspace& a, const Subspace& b) = default;

private:
    Subspace(std::size_t ambient, RrefResult r);

    std::size_t m_ambient = 0;
    Mat m_basis;
    std::vector<std::size_t> m_pivots;
};

/// { v : m v = 0 }.
Subspace nullspace(const Mat& m);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
/// Annihilator in the dual space under the standard pairing.
Subspace annihilator(const Subspace& s);

} // namespace veronese
