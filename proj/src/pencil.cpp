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
#include <veronese/pencil.hpp>

#include <algorithm>

namespace veronese {

Lambda::Lambda(Scalar l1, Scalar l2) : m_l1(std::move(l1)), m_l2(std::move(l2))
{
    if (sgn(m_l1) == 0 && sgn(m_l2) == 0) {
        throw Error(ErrorCode::InvalidArgument, "pencil parameter (0,0) is not allowed");
    }
}

Lambda Lambda::normalized() const
{
    if (sgn(m_l1) != 0) return Lambda(1, m_l2 / m_l1);
    return Lambda(0, 1);
}

bool Lambda::projectively_equal(const Lambda& other) const
{
    return m_l1 * other.m_l2 == m_l2 * other.m_l1;
}

SkewPencil::SkewPencil(Mat a, Mat b) : m_a(std::move(a)), m_b(std::move(b))
{
    if (!m_a.is_square() || !m_b.is_square() || m_a.rows() != m_b.rows()) {
        throw Error(ErrorCode::DimensionMismatch, "pencil matrices must be square of equal size");
    }
    if (!m_a.is_skew() || !m_b.is_skew()) throw Error(ErrorCode::NotSkew, "pencil matrices must be skew-symmetric");
}

bool SkewPencil::is_independent_pair() const
{
    Mat stacked(2, dim() * dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        for (std::size_t j = 0; j < dim(); ++j) {
            stacked(0, i * dim() + j) = m_a(i, j);
            stacked(1, i * dim() + j) = m_b(i, j);
        }
    }
    return rank(stacked) == 2;
}

Mat eval(const SkewPencil& p, const Lambda& lambda)
{
    return p.a() * lambda.l1() + p.b() * lambda.l2();
}

std::size_t generic_rank(const SkewPencil& p)
{
    const std::size_t n = p.dim();
    std::size_t best = rank(p.b());
    for (std::size_t t = 0; t <= n && best < n; ++t) {
        best = std::max(best, rank(eval(p, Lambda(1, static_cast<long>(t)))));
    }
    return best;
}

Mat convolution_matrix(const SkewPencil& p, std::size_t degree)
{
    const std::size_t n = p.dim();
    Mat m(n * (degree + 2), n * (degree + 1));
    for (std::size_t i = 0; i <= degree; ++i) {
        m.set_block(n * i, n * i, p.a());
        m.set_block(n * (i + 1), n * i, p.b());
    }
    return m;
}

std::vector<std::size_t> minimal_indices(const SkewPencil& p)
{
    const std::size_t n = p.dim();
    const std::size_t expected = n - generic_rank(p);
    std::vector<std::size_t> indices;
    if (expected == 0) return indices;

    std::size_t nu_m2 = 0; // nullity at degree d - 2
    std::size_t nu_m1 = 0; // nullity at degree d - 1
    const std::size_t max_degree = (n - 1) / 2;
    for (std::size_t d = 0; d <= max_degree && indices.size() < expected; ++d) {
        const std::size_t cols = n * (d + 1);
        const std::size_t nu = cols - rank(convolution_matrix(p, d));
        const auto count = static_cast<long>(nu - nu_m1) - static_cast<long>(nu_m1 - nu_m2);
        for (long c = 0; c < count; ++c) indices.push_back(d);
        nu_m2 = nu_m1;
        nu_m1 = nu;
    }
    if (indices.size() != expected) {
        throw Error(ErrorCode::VerificationFailed, "minimal index count disagrees with corank");
    }
    return indices;
}

Vec PolyKernelVector::at(const Lambda& lambda) const
{
    Vec out(coeffs.empty() ? 0 : coeffs.front().size());
    for (std::size_t i = 0; i <= degree; ++i) {
        Scalar w = 1;
        for (std::size_t e = 0; e < degree - i; ++e) w *= lambda.l1();
        for (std::size_t e = 0; e < i; ++e) w *= lambda.l2();
        if (sgn(w) == 0) continue;
        for (std::size_t j = 0; j < out.size(); ++j) out[j] += w * coeffs[i][j];
    }
    return out;
}

std::vector<PolyKernelVector> minimal_kernel_basis(const SkewPencil& p)
{
    const std::size_t n = p.dim();
    const std::size_t expected = n - generic_rank(p);
    std::vector<PolyKernelVector> found;
    const std::size_t max_degree = n == 0 ? 0 : (n - 1) / 2;
    for (std::size_t d = 0; d <= max_degree && found.size() < expected; ++d) {
        const std::size_t width = n * (d + 1);
        const Subspace kernel = nullspace(convolution_matrix(p, d));

        Mat shifts(0, width);
        for (const auto& v : found) {
            for (std::size_t b = 0; b + v.degree <= d; ++b) {
                Vec row(width);
                for (std::size_t s = 0; s <= v.degree; ++s) {
                    std::copy(v.coeffs[s].begin(), v.coeffs[s].end(), row.begin() + static_cast<std::ptrdiff_t>(n * (s + b)));
                }
                shifts.append_row(row);
            }
        }
        Subspace current = Subspace::span(shifts);
        if (current.dim() == kernel.dim()) continue;

        for (std::size_t r = 0; r < kernel.dim(); ++r) {
            const auto row = kernel.basis().row(r);
            if (current.contains(row)) continue;
            current = subspace_sum(current, Subspace::span(Mat::from_rows({Vec(row.begin(), row.end())}, width)));

            PolyKernelVector v;
            v.degree = d;
            for (std::size_t s = 0; s <= d; ++s) {
                v.coeffs.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(n * s),
                                      row.begin() + static_cast<std::ptrdiff_t>(n * (s + 1)));
            }
            const auto lead = std::find_if(v.coeffs[d].begin(), v.coeffs[d].end(),
                                           [](const Scalar& x) { return sgn(x) != 0; });
            if (lead == v.coeffs[d].end()) {
                throw Error(ErrorCode::VerificationFailed, "minimal kernel vector with vanishing top coefficient");
            }
            const Scalar scale = 1 / *lead;
            for (auto& c : v.coeffs) {
                for (auto& x : c) x *= scale;
            }
            found.push_back(std::move(v));
            if (current.dim() == kernel.dim()) break;
        }
    }
    if (found.size() != expected) {
        throw Error(ErrorCode::VerificationFailed, "minimal kernel basis has the wrong size");
    }
    return found;
}

PencilAnalysis analyze(const SkewPencil& p)
{
    PencilAnalysis out;
    const std::size_t n = p.dim();
    out.dim = n;
    out.generic_rank = generic_rank(p);
    out.minimal_indices = minimal_indices(p);
    for (auto idx : out.minimal_indices) out.kronecker_dim += 2 * idx + 1;
    out.jordan_dim = n - out.kronecker_dim;
    out.complete = out.jordan_dim == 0;
    out.simple = out.complete &&
                 std::adjacent_find(out.minimal_indices.begin(), out.minimal_indices.end()) ==
                     out.minimal_indices.end();

    Subspace l = Subspace::image(p.a());
    std::size_t unchanged = 0;
    for (std::size_t m = 1;; ++m) {
        const Subspace next = l.restrict_to_kernel_of(nullspace(eval(p, Lambda(1, static_cast<long>(m)))));
        unchanged = next == l ? unchanged + 1 : 0;
        l = next;
        if (m >= n + 2 && unchanged >= 2) break;
    }
    out.bilagrangian = std::move(l);
    return out;
}

SkewPencil kronecker_block(std::size_t n)
{
    const std::size_t dim = 2 * n + 1;
    Mat a(dim, dim);
    Mat b(dim, dim);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t pi = i;
        const std::size_t qi = n + i;
        a(pi, qi) = 1;
        a(qi, pi) = -1;
        b(pi, qi + 1) = 1;
        b(qi + 1, pi) = -1;
    }
    return SkewPencil(std::move(a), std::move(b));
}

SkewPencil jordan_block(std::size_t n, const Scalar& mu)
{
    Mat a(2 * n, 2 * n);
    Mat b(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, n + i) = 1;
        a(n + i, i) = -1;
        b(i, n + i) = mu;
        b(n + i, i) = -mu;
        if (i + 1 < n) {
            b(i, n + i + 1) = 1;
            b(n + i + 1, i) = -1;
        }
    }
    return SkewPencil(std::move(a), std::move(b));
}

SkewPencil direct_sum(const std::vector<SkewPencil>& parts)
{
    std::vector<Mat> as;
    std::vector<Mat> bs;
    for (const auto& p : parts) {
        as.push_back(p.a());
        bs.push_back(p.b());
    }
    return SkewPencil(block_diagonal(as), block_diagonal(bs));
}

SkewPencil canonical_pencil(const std::vector<std::size_t>& indices)
{
    std::vector<SkewPencil> blocks;
    for (auto n : indices) blocks.push_back(kronecker_block(n));
    return direct_sum(blocks);
}

SkewPencil congruence(const SkewPencil& p, const Mat& s)
{
    const Mat st = s.transpose();
    return SkewPencil(st * p.a() * s, st * p.b() * s);
}

SkewPencil rebase(const SkewPencil& p, const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d)
{
    return SkewPencil(p.a() * a + p.b() * b, p.a() * c + p.b() * d);
}

KroneckerBasis kronecker_basis(const SkewPencil& p)
{
    const PencilAnalysis an = analyze(p);
    if (!an.complete) {
        throw Error(ErrorCode::NotComplete, "pencil has a Jordan part of dimension " + std::to_string(an.jordan_dim));
    }
    const std::size_t n = p.dim();
    const auto kernel = minimal_kernel_basis(p);

    // q-chains: q_l = (-1)^(l-1) c_(n+1-l), l = 1..n+1.
    std::vector<std::vector<Vec>> qs;
    for (const auto& v : kernel) {
        std::vector<Vec> chain;
        for (std::size_t l = 1; l <= v.degree + 1; ++l) {
            Vec q = v.coeffs[v.degree + 1 - l];
            if (l % 2 == 0) {
                for (auto& x : q) x = -x;
            }
            chain.push_back(std::move(q));
        }
        qs.push_back(std::move(chain));
    }
    std::vector<Vec> all_q;
    for (const auto& c : qs) all_q.insert(all_q.end(), c.begin(), c.end());
    std::size_t p_count = 0;
    for (const auto& v : kernel) p_count += v.degree;

    // p-vectors: prescribed pairings against every q.
    Mat constraints(2 * all_q.size(), n);
    for (std::size_t m = 0; m < all_q.size(); ++m) {
        const Vec aq = p.a() * all_q[m];
        const Vec bq = p.b() * all_q[m];
        std::copy(aq.begin(), aq.end(), constraints.row(2 * m).begin());
        std::copy(bq.begin(), bq.end(), constraints.row(2 * m + 1).begin());
    }
    Mat rhs(2 * all_q.size(), p_count);
    {
        std::size_t q_offset = 0;
        std::size_t p_offset = 0;
        for (const auto& v : kernel) {
            for (std::size_t i = 0; i < v.degree; ++i) {
                rhs(2 * (q_offset + i), p_offset + i) = 1;         // A-pairing with q_(i+1)
                rhs(2 * (q_offset + i + 1) + 1, p_offset + i) = 1; // B-pairing with q_(i+2)
            }
            q_offset += v.degree + 1;
            p_offset += v.degree;
        }
    }
    Mat p_solution;
    if (p_count > 0 && !solve(constraints, rhs, p_solution)) {
        throw Error(ErrorCode::VerificationFailed, "no dual p-chain for the computed kernel basis");
    }
    std::vector<Vec> ps;
    for (std::size_t i = 0; i < p_count; ++i) ps.push_back(p_solution.col_vec(i));

    // Make the p-vectors isotropic for both forms by corrections from span(q).
    if (p_count > 1) {
        const std::size_t dq = all_q.size();
        auto pairing = [&](const Mat& form) {
            Mat w(p_count, dq);
            for (std::size_t i = 0; i < p_count; ++i) {
                const Vec fp = form.transpose() * ps[i];
                for (std::size_t m = 0; m < dq; ++m) w(i, m) = dot(fp, all_q[m]);
            }
            return w;
        };
        const Mat wa = pairing(p.a());
        const Mat wb = pairing(p.b());
        const std::size_t pairs = p_count * (p_count - 1) / 2;
        Mat sys(2 * pairs, p_count * dq);
        Mat target(2 * pairs, 1);
        std::size_t row = 0;
        for (const Mat* formp : {&p.a(), &p.b()}) {
            const Mat& w = formp == &p.a() ? wa : wb;
            for (std::size_t i = 0; i < p_count; ++i) {
                const Vec fp = formp->transpose() * ps[i];
                for (std::size_t k = i + 1; k < p_count; ++k) {
                    for (std::size_t m = 0; m < dq; ++m) {
                        sys(row, k * dq + m) += w(i, m);
                        sys(row, i * dq + m) -= w(k, m);
                    }
                    target(row, 0) = -dot(fp, ps[k]);
                    ++row;
                }
            }
        }
        Mat y;
        if (!solve(sys, target, y)) {
            throw Error(ErrorCode::VerificationFailed, "cannot make the p-chains isotropic");
        }
        for (std::size_t i = 0; i < p_count; ++i) {
            for (std::size_t m = 0; m < dq; ++m) {
                const Scalar& c = y(i * dq + m, 0);
                if (sgn(c) == 0) continue;
                for (std::size_t j = 0; j < n; ++j) ps[i][j] += c * all_q[m][j];
            }
        }
    }

    KroneckerBasis out;
    out.s = Mat(n, n);
    std::size_t col = 0;
    std::size_t p_offset = 0;
    std::vector<std::size_t> ordered_indices;
    for (std::size_t b = 0; b < kernel.size(); ++b) {
        const std::size_t deg = kernel[b].degree;
        for (std::size_t i = 0; i < deg; ++i, ++col) {
            for (std::size_t j = 0; j < n; ++j) out.s(j, col) = ps[p_offset + i][j];
        }
        for (const auto& q : qs[b]) {
            for (std::size_t j = 0; j < n; ++j) out.s(j, col) = q[j];
            ++col;
        }
        p_offset += deg;
        out.block_layout.push_back(2 * deg + 1);
        ordered_indices.push_back(deg);
    }

    const SkewPencil target = canonical_pencil(ordered_indices);
    const SkewPencil achieved = congruence(p, out.s);
    if (!(achieved == target) || rank(out.s) != n) {
        throw Error(ErrorCode::VerificationFailed, "Kronecker basis failed the congruence check");
    }
    return out;
}

} // namespace veronese
