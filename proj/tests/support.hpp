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
#include <veronese/pencil.hpp>

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace veronese::testing {

/// Seeded generator with range mapping done by hand so sequences do not depend on the
/// standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : m_engine(seed) {}

    long uniform(long lo, long hi) { return lo + static_cast<long>(m_engine() % static_cast<std::uint64_t>(hi - lo + 1)); }

    Scalar rational(long span = 5, long max_den = 3)
    {
        Scalar q(uniform(-span, span), uniform(1, max_den));
        q.canonicalize();
        return q;
    }

    Mat matrix(std::size_t rows, std::size_t cols, long span = 3, long max_den = 1)
    {
        Mat m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rational(span, max_den);
        }
        return m;
    }

    Mat invertible(std::size_t n, long span = 2)
    {
        while (true) {
            Mat m = matrix(n, n, span);
            if (rank(m) == n) return m;
        }
    }

    Mat skew(std::size_t n, long span = 3)
    {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                m(i, j) = rational(span, 1);
                m(j, i) = -m(i, j);
            }
        }
        return m;
    }

    template <class T>
    void shuffle(std::vector<T>& v)
    {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[static_cast<std::size_t>(uniform(0, static_cast<long>(i) - 1))]);
    }

private:
    std::mt19937_64 m_engine;
};

/// Random multiset of Kronecker indices from [0, max_index] with total dimension <= max_dim.
inline std::vector<std::size_t> random_indices(Rng& rng, std::size_t max_index, std::size_t max_dim, bool distinct)
{
    std::vector<std::size_t> out;
    std::size_t dim = 0;
    const long blocks = rng.uniform(1, 4);
    for (long b = 0; b < blocks; ++b) {
        const auto n = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(max_index)));
        if (dim + 2 * n + 1 > max_dim) continue;
        if (distinct && std::find(out.begin(), out.end(), n) != out.end()) continue;
        out.push_back(n);
        dim += 2 * n + 1;
    }
    if (out.empty()) out.push_back(0);
    return out;
}

/// Canonical blocks in shuffled order conjugated by a random invertible congruence.
inline SkewPencil disguise(Rng& rng, std::vector<SkewPencil> parts)
{
    rng.shuffle(parts);
    const SkewPencil sum = direct_sum(parts);
    return congruence(sum, rng.invertible(sum.dim()));
}

inline std::vector<SkewPencil> blocks_for(const std::vector<std::size_t>& indices)
{
    std::vector<SkewPencil> parts;
    for (auto n : indices) parts.push_back(kronecker_block(n));
    return parts;
}

inline std::vector<std::size_t> sorted(std::vector<std::size_t> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

/// The pencil of the two-block illustration on span{e, p, q1, q2}: c1 = p^q1, c2 = p^q2.
inline SkewPencil illustration_pencil()
{
    Mat a(4, 4);
    Mat b(4, 4);
    a(1, 2) = 1;
    a(2, 1) = -1;
    b(1, 3) = 1;
    b(3, 1) = -1;
    return SkewPencil(a, b);
}

} // namespace veronese::testing
