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

#include <veronese/error.hpp>
#include <veronese/subspace.hpp>

namespace veronese {

Subspace::Subspace(std::size_t ambient, RrefResult r)
    : m_ambient(ambient), m_basis(r.reduced.row_range(0, r.rank)), m_pivots(std::move(r.pivots))
{
    if (m_basis.rows() == 0) m_basis = Mat(0, ambient);
}

Subspace Subspace::zero(std::size_t ambient_dim)
{
    return Subspace(ambient_dim, RrefResult{Mat(0, ambient_dim), 0, {}});
}

Subspace Subspace::full(std::size_t ambient_dim)
{
    RrefResult r{Mat::identity(ambient_dim), ambient_dim, {}};
    for (std::size_t i = 0; i < ambient_dim; ++i) r.pivots.push_back(i);
    return Subspace(ambient_dim, std::move(r));
}

Subspace Subspace::span(const Mat& rows)
{
    if (rows.rows() == 0) return zero(rows.cols());
    return Subspace(rows.cols(), rref(rows));
}

Subspace Subspace::span(std::span<const Vec> vectors, std::size_t ambient_dim)
{
    Mat m(vectors.size(), ambient_dim);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != ambient_dim) throw Error(ErrorCode::DimensionMismatch, "span: vector length");
        for (std::size_t j = 0; j < ambient_dim; ++j) m(i, j) = vectors[i][j];
    }
    return span(m);
}

Subspace Subspace::image(const Mat& m) { return span(m.transpose()); }

Vec Subspace::reduce(std::span<const Scalar> v) const
{
    if (v.size() != m_ambient) throw Error(ErrorCode::DimensionMismatch, "reduce: vector length");
    Vec out(v.begin(), v.end());
    Scalar f;
    for (std::size_t r = 0; r < m_pivots.size(); ++r) {
        if (sgn(out[m_pivots[r]]) == 0) continue;
        f = out[m_pivots[r]];
        const auto row = m_basis.row(r);
        for (std::size_t j = m_pivots[r]; j < m_ambient; ++j) {
            if (sgn(row[j]) != 0) out[j] -= f * row[j];
        }
    }
    return out;
}

Vec Subspace::coordinates(std::span<const Scalar> v) const
{
    if (v.size() != m_ambient) throw Error(ErrorCode::DimensionMismatch, "coordinates: vector length");
    Vec c(m_pivots.size());
    for (std::size_t r = 0; r < m_pivots.size(); ++r) c[r] = v[m_pivots[r]];
    return c;
}

bool Subspace::contains(std::span<const Scalar> v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const
{
    if (other.m_ambient != m_ambient) throw Error(ErrorCode::DimensionMismatch, "contains: ambient mismatch");
    for (std::size_t i = 0; i < other.dim(); ++i) {
        if (!contains(other.m_basis.row(i))) return false;
    }
    return true;
}

Subspace Subspace::restrict_to_kernel_of(const Subspace& covectors) const
{
    if (covectors.m_ambient != m_ambient) {
        throw Error(ErrorCode::DimensionMismatch, "restrict_to_kernel_of: ambient mismatch");
    }
    if (dim() == 0 || covectors.dim() == 0) return *this;
    // Coefficient vectors c with (c * basis) . xi = 0, i.e. (K * basis^T) c = 0.
    const Mat pairing = covectors.m_basis * m_basis.transpose();
    const Subspace coeffs = nullspace(pairing);
    return span(coeffs.basis() * m_basis);
}

Subspace nullspace(const Mat& m)
{
    const RrefResult r = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : r.pivots) is_pivot[p] = true;
    Mat basis(n - r.rank, n);
    std::size_t k = 0;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        basis(k, f) = 1;
        for (std::size_t i = 0; i < r.rank; ++i) basis(k, r.pivots[i]) = -r.reduced(i, f);
        ++k;
    }
    return Subspace::span(basis);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b)
{
    if (a.ambient_dim() != b.ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "subspace_sum: ambient mismatch");
    if (a.dim() == 0) return b;
    if (b.dim() == 0) return a;
    return Subspace::span(vstack(a.basis(), b.basis()));
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b)
{
    if (a.ambient_dim() != b.ambient_dim()) {
        throw Error(ErrorCode::DimensionMismatch, "subspace_intersect: ambient mismatch");
    }
    return a.restrict_to_kernel_of(annihilator(b));
}

Subspace annihilator(const Subspace& s) { return nullspace(s.basis()); }

} // namespace veronese
