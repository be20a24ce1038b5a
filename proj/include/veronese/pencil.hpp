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
#include <veronese/subspace.hpp>

#include <cstddef>
#include <vector>

namespace veronese {

/// Projective pencil parameter (l1, l2) != (0, 0).
class Lambda {
public:
    Lambda(Scalar l1, Scalar l2);

    const Scalar& l1() const noexcept { return m_l1; }
    const Scalar& l2() const noexcept { return m_l2; }

    /// Representative with the first nonzero component equal to 1.
    Lambda normalized() const;
    bool projectively_equal(const Lambda& other) const;

private:
    Scalar m_l1;
    Scalar m_l2;
};

/// A pair of skew-symmetric N x N matrices (A, B) standing for the family l1*A + l2*B.
class SkewPencil {
public:
    SkewPencil() = default;
    /// Throws Error(NotSkew) or Error(DimensionMismatch).
    SkewPencil(Mat a, Mat b);

    std::size_t dim() const noexcept { return m_a.rows(); }
    const Mat& a() const noexcept { return m_a; }
    const Mat& b() const noexcept { return m_b; }

    /// A and B linearly independent as matrices.
    bool is_independent_pair() const;

    friend bool operator==(const SkewPencil&, const SkewPencil&) = default;

private:
    Mat m_a;
    Mat m_b;
};

Mat eval(const SkewPencil& p, const Lambda& lambda);

/// Maximal rank over the finite sample {(1,0), (1,1), ..., (1,N), (0,1)}. A rank drop
/// happens on the zero set of nonzero minors of degree <= N, so the sample always
/// contains a point of maximal rank.
std::size_t generic_rank(const SkewPencil& p);

/// Matrix of v(lambda) -> (l1 A + l2 B) v(lambda) on homogeneous vector polynomials of
/// degree d, v = sum_i l1^(d-i) l2^i v_i. Size N(d+2) x N(d+1); block column i holds A
/// in block row i and B in block row i+1.
Mat convolution_matrix(const SkewPencil& p, std::size_t degree);

/// Kronecker minimal indices n_1 <= ... <= n_k, read from the second differences of the
/// nullities of the convolution matrices.
std::vector<std::size_t> minimal_indices(const SkewPencil& p);

/// A homogeneous polynomial kernel vector sum_i l1^(n-i) l2^i coeffs[i].
struct PolyKernelVector {
    std::size_t degree = 0;
    std::vector<Vec> coeffs;

    Vec at(const Lambda& lambda) const;
};

/// Minimal polynomial basis of the kernel, degrees ascending. At each degree the new
/// vectors are the canonical-basis vectors of the kernel of the convolution matrix
/// that are not combinations of the lambda-shifts of lower degree vectors. Each
/// vector is scaled so that the leading entry of its top coefficient is 1.
std::vector<PolyKernelVector> minimal_kernel_basis(const SkewPencil& p);

struct PencilAnalysis {
    std::size_t dim = 0;
    std::size_t generic_rank = 0;
    std::vector<std::size_t> minimal_indices;
    std::size_t kronecker_dim = 0;
    std::size_t jordan_dim = 0;
    bool complete = false;
    bool simple = false;
    Subspace bilagrangian;
};

/// Completeness is the dimension count sum(2 n_j + 1) = N, i.e. no regular (Jordan)
/// part. The bilagrangian subspace is the intersection of the images at (1, m),
/// m = 0, 1, ..., stopped once it has not shrunk for two steps past m = N.
PencilAnalysis analyze(const SkewPencil& p);

struct KroneckerBasis {
    Mat s;
    std::vector<std::size_t> block_layout; ///< block sizes 2 n_j + 1, ascending
};

/// Congruence S with S^T (l1 A + l2 B) S equal to the canonical block-diagonal Kronecker
/// form. Blocks of index n use the basis order (p_1..p_n, q_1..q_{n+1}) with
/// A-pairing p_i.q_i = 1 and B-pairing p_i.q_{i+1} = 1. Throws Error(NotComplete) when a
/// Jordan part is present.
KroneckerBasis kronecker_basis(const SkewPencil& p);

/// The canonical Kronecker block of index n (dimension 2n + 1); n = 0 is the zero 1x1 pencil.
SkewPencil kronecker_block(std::size_t n);
/// Regular block of dimension 2n with pairing matrices I_n and the Jordan cell J_n(mu).
SkewPencil jordan_block(std::size_t n, const Scalar& mu);
SkewPencil direct_sum(const std::vector<SkewPencil>& parts);
/// Canonical form with the given indices, in the given order.
SkewPencil canonical_pencil(const std::vector<std::size_t>& indices);
/// (S^T A S, S^T B S).
SkewPencil congruence(const SkewPencil& p, const Mat& s);
/// (a A + b B, c A + d B).
SkewPencil rebase(const SkewPencil& p, const Scalar& a, const Scalar& b, const Scalar& c,
                  const Scalar& d);

} // namespace veronese
