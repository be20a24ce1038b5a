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

#include <veronese/scalar.hpp>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace veronese {

/// Dense row-major matrix of exact rationals.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols);
    Mat(std::initializer_list<std::initializer_list<Scalar>> rows);

    static Mat identity(std::size_t n);
    static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols);

    std::size_t rows() const noexcept { return m_rows; }
    std::size_t cols() const noexcept { return m_cols; }

    Scalar& operator()(std::size_t i, std::size_t j) { return m_data[i * m_cols + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return m_data[i * m_cols + j]; }

    std::span<const Scalar> row(std::size_t i) const { return {m_data.data() + i * m_cols, m_cols}; }
    std::span<Scalar> row(std::size_t i) { return {m_data.data() + i * m_cols, m_cols}; }
    Vec row_vec(std::size_t i) const;
    Vec col_vec(std::size_t j) const;

    Mat transpose() const;
    bool is_zero() const;
    bool is_square() const noexcept { return m_rows == m_cols; }
    bool is_skew() const;

    /// Copies `block` with its top-left corner at (r0, c0).
    void set_block(std::size_t r0, std::size_t c0, const Mat& block);
    /// Rows [r0, r0 + count).
    Mat row_range(std::size_t r0, std::size_t count) const;
    void append_row(std::span<const Scalar> values);

    Mat& operator+=(const Mat& other);
    Mat& operator-=(const Mat& other);
    Mat& operator*=(const Scalar& factor);

    friend bool operator==(const Mat& a, const Mat& b) = default;

private:
    std::size_t m_rows = 0;
    std::size_t m_cols = 0;
    std::vector<Scalar> m_data;
};

Mat operator+(Mat a, const Mat& b);
Mat operator-(Mat a, const Mat& b);
Mat operator*(const Mat& a, const Mat& b);
Mat operator*(Mat a, const Scalar& factor);
Mat operator*(const Scalar& factor, Mat a);
Vec operator*(const Mat& a, const Vec& v);

/// Block-diagonal matrix with the given diagonal blocks.
Mat block_diagonal(const std::vector<Mat>& blocks);
/// Rows of `top` followed by rows of `bottom`.
Mat vstack(const Mat& top, const Mat& bottom);

struct RrefResult {
    Mat reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form. Forward elimination is fraction-free (Bareiss) on the
/// row-wise integer scaling of `m`; the echelon rows are then normalized and
/// back-substituted.
RrefResult rref(const Mat& m);

/// Rank by fraction-free elimination only.
std::size_t rank(const Mat& m);

/// Determinant of a square matrix (Bareiss).
Scalar determinant(const Mat& m);

/// Solves m * x = b for every column of b. Returns false when some column is
/// inconsistent; free variables of a consistent system are set to zero.
bool solve(const Mat& m, const Mat& b, Mat& x);

/// Inverse of a square matrix; throws Error(InvalidArgument) when singular.
Mat inverse(const Mat& m);

} // namespace veronese
