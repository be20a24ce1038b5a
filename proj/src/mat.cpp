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
#include <veronese/mat.hpp>

#include <algorithm>
#include <utility>

namespace veronese {

Mat::Mat(std::size_t rows, std::size_t cols) : m_rows(rows), m_cols(cols), m_data(rows * cols) {}

Mat::Mat(std::initializer_list<std::initializer_list<Scalar>> rows)
{
    m_rows = rows.size();
    m_cols = m_rows == 0 ? 0 : rows.begin()->size();
    m_data.reserve(m_rows * m_cols);
    for (const auto& r : rows) {
        if (r.size() != m_cols) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
        m_data.insert(m_data.end(), r.begin(), r.end());
    }
}

Mat Mat::identity(std::size_t n)
{
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, std::size_t cols)
{
    Mat m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw Error(ErrorCode::DimensionMismatch, "row length mismatch");
        std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
    }
    return m;
}

Vec Mat::row_vec(std::size_t i) const
{
    const auto r = row(i);
    return Vec(r.begin(), r.end());
}

Vec Mat::col_vec(std::size_t j) const
{
    Vec v(m_rows);
    for (std::size_t i = 0; i < m_rows; ++i) v[i] = (*this)(i, j);
    return v;
}

Mat Mat::transpose() const
{
    Mat t(m_cols, m_rows);
    for (std::size_t i = 0; i < m_rows; ++i) {
        for (std::size_t j = 0; j < m_cols; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
}

bool Mat::is_zero() const
{
    return std::all_of(m_data.begin(), m_data.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

bool Mat::is_skew() const
{
    if (!is_square()) return false;
    for (std::size_t i = 0; i < m_rows; ++i) {
        for (std::size_t j = i; j < m_cols; ++j) {
            if ((*this)(i, j) != -(*this)(j, i)) return false;
        }
    }
    return true;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& block)
{
    if (r0 + block.rows() > m_rows || c0 + block.cols() > m_cols) {
        throw Error(ErrorCode::DimensionMismatch, "set_block out of range");
    }
    for (std::size_t i = 0; i < block.rows(); ++i) {
        for (std::size_t j = 0; j < block.cols(); ++j) (*this)(r0 + i, c0 + j) = block(i, j);
    }
}

Mat Mat::row_range(std::size_t r0, std::size_t count) const
{
    Mat out(count, m_cols);
    std::copy(m_data.begin() + static_cast<std::ptrdiff_t>(r0 * m_cols),
              m_data.begin() + static_cast<std::ptrdiff_t>((r0 + count) * m_cols), out.m_data.begin());
    return out;
}

void Mat::append_row(std::span<const Scalar> values)
{
    if (m_rows == 0 && m_cols == 0) m_cols = values.size();
    if (values.size() != m_cols) throw Error(ErrorCode::DimensionMismatch, "append_row length");
    m_data.insert(m_data.end(), values.begin(), values.end());
    ++m_rows;
}

Mat& Mat::operator+=(const Mat& other)
{
    if (m_rows != other.m_rows || m_cols != other.m_cols) {
        throw Error(ErrorCode::DimensionMismatch, "matrix sum shape mismatch");
    }
    for (std::size_t i = 0; i < m_data.size(); ++i) m_data[i] += other.m_data[i];
    return *this;
}

Mat& Mat::operator-=(const Mat& other)
{
    if (m_rows != other.m_rows || m_cols != other.m_cols) {
        throw Error(ErrorCode::DimensionMismatch, "matrix difference shape mismatch");
    }
    for (std::size_t i = 0; i < m_data.size(); ++i) m_data[i] -= other.m_data[i];
    return *this;
}

Mat& Mat::operator*=(const Scalar& factor)
{
    for (auto& x : m_data) x *= factor;
    return *this;
}

Mat operator+(Mat a, const Mat& b) { return a += b; }
Mat operator-(Mat a, const Mat& b) { return a -= b; }
Mat operator*(Mat a, const Scalar& factor) { return a *= factor; }
Mat operator*(const Scalar& factor, Mat a) { return a *= factor; }

Mat operator*(const Mat& a, const Mat& b)
{
    if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
    Mat c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (sgn(b(k, j)) != 0) c(i, j) += aik * b(k, j);
            }
        }
    }
    return c;
}

Vec operator*(const Mat& a, const Vec& v)
{
    if (a.cols() != v.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
    Vec out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (sgn(a(i, j)) != 0 && sgn(v[j]) != 0) out[i] += a(i, j) * v[j];
        }
    }
    return out;
}

Mat block_diagonal(const std::vector<Mat>& blocks)
{
    std::size_t rows = 0;
    std::size_t cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    Mat out(rows, cols);
    std::size_t r = 0;
    std::size_t c = 0;
    for (const auto& b : blocks) {
        out.set_block(r, c, b);
        r += b.rows();
        c += b.cols();
    }
    return out;
}

Mat vstack(const Mat& top, const Mat& bottom)
{
    if (top.rows() == 0) return bottom;
    if (bottom.rows() == 0) return top;
    if (top.cols() != bottom.cols()) throw Error(ErrorCode::DimensionMismatch, "vstack width mismatch");
    Mat out(top.rows() + bottom.rows(), top.cols());
    out.set_block(0, 0, top);
    out.set_block(top.rows(), 0, bottom);
    return out;
}

namespace {

// Integer working copy: every row scaled by the lcm of its denominators.
struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<mpz_class> data;
    mpz_class scale = 1; // product of the row scalings
    int sign = 1;        // parity of row swaps

    mpz_class& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
};

IntMatrix to_integer_rows(const Mat& m)
{
    IntMatrix im{m.rows(), m.cols(), std::vector<mpz_class>(m.rows() * m.cols())};
    for (std::size_t i = 0; i < m.rows(); ++i) {
        mpz_class l = 1;
        for (const auto& x : m.row(i)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Scalar& x = m(i, j);
            im.at(i, j) = x.get_num() * (l / x.get_den());
        }
        im.scale *= l;
    }
    return im;
}

void swap_rows(IntMatrix& im, std::size_t a, std::size_t b)
{
    if (a == b) return;
    for (std::size_t j = 0; j < im.cols; ++j) std::swap(im.at(a, j), im.at(b, j));
    im.sign = -im.sign;
}

// Bareiss forward elimination in place; returns the pivot columns.
std::vector<std::size_t> bareiss_forward(IntMatrix& im)
{
    std::vector<std::size_t> pivots;
    mpz_class prev = 1;
    mpz_class t;
    std::size_t r = 0;
    for (std::size_t c = 0; c < im.cols && r < im.rows; ++c) {
        std::size_t p = r;
        while (p < im.rows && im.at(p, c) == 0) ++p;
        if (p == im.rows) continue;
        swap_rows(im, p, r);
        const mpz_class& piv = im.at(r, c);
        for (std::size_t i = r + 1; i < im.rows; ++i) {
            const mpz_class lead = im.at(i, c);
            for (std::size_t j = c + 1; j < im.cols; ++j) {
                mpz_class& e = im.at(i, j);
                e *= piv;
                t = lead * im.at(r, j);
                e -= t;
                mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), prev.get_mpz_t());
            }
            im.at(i, c) = 0;
        }
        prev = piv;
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

RrefResult rref(const Mat& m)
{
    IntMatrix im = to_integer_rows(m);
    const auto pivots = bareiss_forward(im);
    const std::size_t rk = pivots.size();

    Mat red(m.rows(), m.cols());
    for (std::size_t r = 0; r < rk; ++r) {
        const mpz_class& piv = im.at(r, pivots[r]);
        for (std::size_t j = pivots[r]; j < m.cols(); ++j) {
            if (im.at(r, j) != 0) {
                red(r, j) = Scalar(im.at(r, j), piv);
                red(r, j).canonicalize();
            }
        }
    }
    Scalar f;
    for (std::size_t r = rk; r-- > 0;) {
        const std::size_t pc = pivots[r];
        for (std::size_t u = 0; u < r; ++u) {
            if (sgn(red(u, pc)) == 0) continue;
            f = red(u, pc);
            for (std::size_t j = pc; j < m.cols(); ++j) {
                if (sgn(red(r, j)) != 0) red(u, j) -= f * red(r, j);
            }
        }
    }
    return RrefResult{std::move(red), rk, pivots};
}

std::size_t rank(const Mat& m)
{
    IntMatrix im = to_integer_rows(m);
    return bareiss_forward(im).size();
}

Scalar determinant(const Mat& m)
{
    if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
    if (m.rows() == 0) return 1;
    IntMatrix im = to_integer_rows(m);
    const auto pivots = bareiss_forward(im);
    if (pivots.size() < m.rows()) return 0;
    Scalar d(im.at(m.rows() - 1, m.cols() - 1) * im.sign, im.scale);
    d.canonicalize();
    return d;
}

bool solve(const Mat& m, const Mat& b, Mat& x)
{
    if (m.rows() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "solve: row count mismatch");
    Mat aug(m.rows(), m.cols() + b.cols());
    aug.set_block(0, 0, m);
    aug.set_block(0, m.cols(), b);
    const RrefResult r = rref(aug);
    if (!r.pivots.empty() && r.pivots.back() >= m.cols()) return false;
    x = Mat(m.cols(), b.cols());
    for (std::size_t i = 0; i < r.rank; ++i) {
        for (std::size_t t = 0; t < b.cols(); ++t) x(r.pivots[i], t) = r.reduced(i, m.cols() + t);
    }
    return true;
}

Mat inverse(const Mat& m)
{
    if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
    if (rank(m) != m.rows()) throw Error(ErrorCode::InvalidArgument, "inverse of singular matrix");
    Mat x;
    solve(m, Mat::identity(m.rows()), x);
    return x;
}

} // namespace veronese
