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
#include <veronese/liealg.hpp>

#include <algorithm>
#include <string>

namespace veronese {

StructureConstants::StructureConstants(std::size_t dim, std::vector<std::string> labels)
    : m_dim(dim), m_labels(std::move(labels))
{
    if (!m_labels.empty() && m_labels.size() != dim) {
        throw Error(ErrorCode::DimensionMismatch, "label count differs from the algebra dimension");
    }
}

void StructureConstants::set(std::size_t i, std::size_t j, std::size_t k, const Scalar& value)
{
    if (i >= m_dim || j >= m_dim || k >= m_dim) throw Error(ErrorCode::InvalidArgument, "structure constant index out of range");
    if (i == j) {
        if (sgn(value) != 0) throw Error(ErrorCode::InvalidArgument, "c_ii^k must vanish");
        return;
    }
    const bool flip = i > j;
    const std::array<std::size_t, 3> key{std::min(i, j), std::max(i, j), k};
    const Scalar v = flip ? Scalar(-value) : value;
    if (sgn(v) == 0) m_entries.erase(key);
    else m_entries[key] = v;
}

Scalar StructureConstants::operator()(std::size_t i, std::size_t j, std::size_t k) const
{
    if (i == j) return 0;
    const auto it = m_entries.find({std::min(i, j), std::max(i, j), k});
    if (it == m_entries.end()) return 0;
    return i < j ? it->second : Scalar(-it->second);
}

VarNames StructureConstants::vars() const
{
    return m_labels.empty() ? indexed_vars(m_dim) : make_vars(m_labels);
}

std::optional<JacobiWitness> jacobi_violation(const StructureConstants& sc)
{
    const std::size_t n = sc.dim();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                for (std::size_t l = 0; l < n; ++l) {
                    Scalar s = 0;
                    for (std::size_t m = 0; m < n; ++m) {
                        s += sc(i, j, m) * sc(m, k, l) + sc(j, k, m) * sc(m, i, l) + sc(k, i, m) * sc(m, j, l);
                    }
                    if (sgn(s) != 0) return JacobiWitness{{i, j, k, l}, s};
                }
            }
        }
    }
    return std::nullopt;
}

bool jacobi_sc(const StructureConstants& sc) { return !jacobi_violation(sc).has_value(); }

namespace {

struct SlIndex {
    std::vector<std::pair<std::size_t, std::size_t>> offdiag; // (row, col) of E_ij, after the n-1 H's
};

SlIndex sl_index(std::size_t n)
{
    SlIndex out;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) out.offdiag.emplace_back(i, j);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) out.offdiag.emplace_back(i, j);
    }
    return out;
}

void require_sl_rank(std::size_t n)
{
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "sl(n) needs n >= 2");
}

// Coordinates of a traceless matrix in the sl(n) basis.
Vec sl_coordinates(const Mat& m)
{
    const std::size_t n = m.rows();
    Vec out(n * n - 1);
    Scalar running = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        running += m(i, i);
        out[i] = running;
    }
    const SlIndex idx = sl_index(n);
    for (std::size_t t = 0; t < idx.offdiag.size(); ++t) out[n - 1 + t] = m(idx.offdiag[t].first, idx.offdiag[t].second);
    return out;
}

} // namespace

Mat sl_basis_matrix(std::size_t n, std::size_t index)
{
    require_sl_rank(n);
    Mat m(n, n);
    if (index < n - 1) {
        m(index, index) = 1;
        m(index + 1, index + 1) = -1;
        return m;
    }
    const SlIndex idx = sl_index(n);
    const auto [r, c] = idx.offdiag.at(index - (n - 1));
    m(r, c) = 1;
    return m;
}

StructureConstants sl_structure(std::size_t n)
{
    require_sl_rank(n);
    const std::size_t d = n * n - 1;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i + 1 < n; ++i) labels.push_back("h" + std::to_string(i + 1));
    for (const auto& [r, c] : sl_index(n).offdiag) labels.push_back("e" + std::to_string(r + 1) + std::to_string(c + 1));
    if (n == 2) labels = {"h", "e", "f"};

    StructureConstants sc(d, labels);
    std::vector<Mat> basis;
    for (std::size_t i = 0; i < d; ++i) basis.push_back(sl_basis_matrix(n, i));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            const Vec coords = sl_coordinates(basis[i] * basis[j] - basis[j] * basis[i]);
            for (std::size_t k = 0; k < d; ++k) {
                if (sgn(coords[k]) != 0) sc.set(i, j, k, coords[k]);
            }
        }
    }
    return sc;
}

Mat trace_form_gram(std::size_t n)
{
    require_sl_rank(n);
    const std::size_t d = n * n - 1;
    Mat g(d, d);
    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t l = 0; l < d; ++l) {
            const Mat prod = sl_basis_matrix(n, k) * sl_basis_matrix(n, l);
            for (std::size_t i = 0; i < n; ++i) g(k, l) += prod(i, i);
        }
    }
    return g;
}

PolyMultiVec lie_poisson_bivector(const StructureConstants& sc)
{
    const VarNames v = sc.vars();
    PolyMultiVec out(v, 2);
    for (const auto& [key, c] : sc.entries()) out.add({key[0], key[1]}, c * MultiPoly::variable(v, key[2]));
    return out;
}

void require_lie_algebra(const StructureConstants& sc)
{
    if (sc.entries().empty()) {
        throw Error(ErrorCode::DependentPair, "abelian algebra: c1 vanishes, so c1 and c2 are not independent");
    }
    if (const auto w = jacobi_violation(sc)) {
        const auto& q = w->indices;
        throw Error(ErrorCode::JacobiFails, "Jacobi identity fails at (i,j,k,l) = (" + std::to_string(q[0] + 1) + "," +
                                                std::to_string(q[1] + 1) + "," + std::to_string(q[2] + 1) + "," +
                                                std::to_string(q[3] + 1) + "), value " + to_string(w->value));
    }
}

TranslationPair translation_pair(const StructureConstants& sc, const Vec& a)
{
    if (a.size() != sc.dim()) throw Error(ErrorCode::DimensionMismatch, "shift point has the wrong dimension");
    require_lie_algebra(sc);
    TranslationPair out;
    out.sc = sc;
    out.a = a;
    out.c1 = lie_poisson_bivector(sc);
    out.c2 = bivector_from_matrix(out.c1.vars(), eval_bivector(out.c1, a));
    if (out.c2.is_zero()) throw Error(ErrorCode::ZeroShift, "c(a) = 0: the frozen bivector vanishes");
    return out;
}

CasimirSet casimir_set(std::vector<MultiPoly> polys)
{
    CasimirSet out;
    for (auto& g : polys) {
        if (g.is_zero() || !g.is_homogeneous() || g.total_degree() < 1) {
            throw Error(ErrorCode::InvalidArgument, "Casimir polynomials must be nonzero and homogeneous of degree >= 1");
        }
        out.exponents.push_back(static_cast<std::size_t>(g.total_degree() - 1));
        out.polys.push_back(std::move(g));
    }
    return out;
}

CasimirSet casimirs_sl(std::size_t n)
{
    require_sl_rank(n);
    const std::size_t d = n * n - 1;
    const VarNames v = sl_structure(n).vars();
    const Mat ginv = inverse(trace_form_gram(n));

    // X(x) = sum_l xhat_l e_l with xhat = G^{-1} x
    std::vector<MultiPoly> xhat(d, MultiPoly(v));
    for (std::size_t l = 0; l < d; ++l) {
        for (std::size_t k = 0; k < d; ++k) {
            if (sgn(ginv(l, k)) != 0) xhat[l] += ginv(l, k) * MultiPoly::variable(v, k);
        }
    }
    std::vector<std::vector<MultiPoly>> x(n, std::vector<MultiPoly>(n, MultiPoly(v)));
    for (std::size_t l = 0; l < d; ++l) {
        const Mat e = sl_basis_matrix(n, l);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (sgn(e(i, j)) != 0) x[i][j] += e(i, j) * xhat[l];
            }
        }
    }
    auto multiply = [&](const std::vector<std::vector<MultiPoly>>& p, const std::vector<std::vector<MultiPoly>>& q) {
        std::vector<std::vector<MultiPoly>> r(n, std::vector<MultiPoly>(n, MultiPoly(v)));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                if (p[i][k].is_zero()) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    if (!q[k][j].is_zero()) r[i][j] += p[i][k] * q[k][j];
                }
            }
        }
        return r;
    };

    std::vector<MultiPoly> polys;
    auto power = x;
    for (std::size_t j = 1; j < n; ++j) {
        power = multiply(power, x);
        MultiPoly tr(v);
        for (std::size_t i = 0; i < n; ++i) tr += power[i][i];
        polys.push_back(std::move(tr));
    }
    return casimir_set(std::move(polys));
}

RationalSequence::RationalSequence(std::uint64_t seed) : m_engine(seed) {}

Scalar RationalSequence::next(long span, long max_den)
{
    const auto num = static_cast<long>(m_engine() % static_cast<std::uint64_t>(2 * span + 1)) - span;
    const auto den = 1 + static_cast<long>(m_engine() % static_cast<std::uint64_t>(max_den));
    Scalar q(num, den);
    q.canonicalize();
    return q;
}

Vec RationalSequence::vector(std::size_t n, long span, long max_den)
{
    Vec out(n);
    for (auto& c : out) c = next(span, max_den);
    return out;
}

CasimirCertificate certify_casimirs(const StructureConstants& sc, const CasimirSet& cs, std::uint64_t seed)
{
    const PolyMultiVec c1 = lie_poisson_bivector(sc);
    const VarNames& v = c1.vars();
    const std::size_t n = sc.dim();
    CasimirCertificate out;
    out.ok = true;
    for (const auto& g : cs.polys) {
        if (g.nvars() != n) throw Error(ErrorCode::DimensionMismatch, "Casimir polynomial has the wrong variable count");
        if (g.total_degree() > 8) out.sampled_only = true;
    }
    if (!out.sampled_only) {
        for (const auto& g0 : cs.polys) {
            const MultiPoly g = g0.extend_vars(v);
            std::vector<MultiPoly> grad;
            for (std::size_t j = 0; j < n; ++j) grad.push_back(g.derivative(j));
            for (std::size_t i = 0; i < n; ++i) {
                MultiPoly row(v);
                for (std::size_t j = 0; j < n; ++j) {
                    const MultiPoly cij = i < j ? c1.get({i, j}) : (i > j ? -c1.get({j, i}) : MultiPoly(v));
                    if (!cij.is_zero() && !grad[j].is_zero()) row += cij * grad[j];
                }
                if (!row.is_zero()) out.ok = false;
            }
        }
        return out;
    }
    RationalSequence seq(seed);
    for (int s = 0; s < 20 && out.ok; ++s) {
        const Vec x = seq.vector(n);
        const Mat c = eval_bivector(c1, x);
        for (const auto& g : cs.polys) {
            if (!is_zero(c * gradient_at(g, x))) out.ok = false;
        }
    }
    return out;
}

TaylorTable taylor_table(const CasimirSet& cs, const Vec& a)
{
    TaylorTable tt;
    tt.exponents = cs.exponents;
    for (const auto& g : cs.polys) {
        if (a.size() != g.nvars()) throw Error(ErrorCode::DimensionMismatch, "shift point has the wrong dimension");
        // g^i = (1/i!) (a . grad)^i g
        std::vector<MultiPoly> row{g};
        const auto deg = static_cast<std::size_t>(g.total_degree());
        MultiPoly current = g;
        for (std::size_t i = 1; i <= deg; ++i) {
            MultiPoly next(g.vars());
            for (std::size_t k = 0; k < a.size(); ++k) {
                if (sgn(a[k]) != 0) next += a[k] * current.derivative(k);
            }
            next *= Scalar(1, static_cast<long>(i));
            row.push_back(next);
            current = std::move(next);
        }
        tt.coeffs.push_back(std::move(row));
    }
    return tt;
}

namespace {

std::vector<Vec> differentials(const TaylorTable& tt, const Vec& x, bool include_top)
{
    std::vector<Vec> out;
    for (std::size_t j = 0; j < tt.coeffs.size(); ++j) {
        const std::size_t last = include_top ? tt.coeffs[j].size() - 1 : tt.exponents[j];
        for (std::size_t i = 0; i <= last; ++i) out.push_back(gradient_at(tt.coeffs[j][i], x));
    }
    return out;
}

} // namespace

std::size_t differential_rank(const TaylorTable& tt, const Vec& x)
{
    const auto ds = differentials(tt, x, false);
    if (ds.empty()) return 0;
    return rank(Mat::from_rows(ds, x.size()));
}

bool independence_check(const TaylorTable& tt, const Vec& x)
{
    std::size_t count = 0;
    for (auto m : tt.exponents) count += m + 1;
    return differential_rank(tt, x) == count;
}

bool involutivity_check(const TaylorTable& tt, const TranslationPair& pair, const Vec& x,
                        const std::vector<Lambda>& samples)
{
    const auto ds = differentials(tt, x, true);
    const Mat c1 = eval_bivector(pair.c1, x);
    const Mat c2 = eval_bivector(pair.c2, x);
    for (const Lambda& lam : samples) {
        const Mat m = c1 * lam.l1() + c2 * lam.l2();
        for (std::size_t u = 0; u < ds.size(); ++u) {
            const Vec mv = m * ds[u];
            for (std::size_t w = u + 1; w < ds.size(); ++w) {
                if (sgn(dot(ds[w], mv)) != 0) return false;
            }
        }
    }
    return true;
}

std::vector<Vec> web_generators(const TaylorTable& tt, const Lambda& lambda, const Vec& x)
{
    std::vector<Vec> out;
    for (std::size_t j = 0; j < tt.coeffs.size(); ++j) {
        const std::size_t m = tt.exponents[j];
        Vec alpha(x.size());
        for (std::size_t i = 0; i <= m; ++i) {
            Scalar w = 1;
            for (std::size_t e = 0; e < m - i; ++e) w *= lambda.l1();
            for (std::size_t e = 0; e < i; ++e) w *= lambda.l2();
            if (sgn(w) == 0) continue;
            const Vec d = gradient_at(tt.coeffs[j][i], x);
            for (std::size_t c = 0; c < alpha.size(); ++c) alpha[c] += w * d[c];
        }
        out.push_back(std::move(alpha));
    }
    return out;
}

TranslationReport verify_translation(const StructureConstants& sc, const CasimirSet& cs, const Vec& a, const Vec& x,
                                 std::uint64_t seed)
{
    if (x.size() != sc.dim()) throw Error(ErrorCode::DimensionMismatch, "point has the wrong dimension");
    const TranslationPair pair = translation_pair(sc, a);
    const SkewPencil pencil(eval_bivector(pair.c1, x), eval_bivector(pair.c2, x));

    TranslationReport rep;
    rep.analysis = analyze(pencil);
    if (!rep.analysis.complete) {
        throw Error(ErrorCode::IncompletePoint, "the pencil at x has a Jordan part (x lies in the incomplete locus); "
                                                "choose another point or seed");
    }
    rep.exponents = cs.exponents;
    std::sort(rep.exponents.begin(), rep.exponents.end());
    rep.type_matches = rep.analysis.minimal_indices == rep.exponents;

    const std::size_t r = cs.polys.size();
    std::size_t msum = 0;
    for (auto m : cs.exponents) msum += m;
    rep.exponent_sum = 2 * msum + r == sc.dim();
    rep.expected_differentials = (sc.dim() + r) / 2;

    const TaylorTable tt = taylor_table(cs, a);
    rep.differentials = differential_rank(tt, x);
    rep.coframe = independence_check(tt, x) && rep.differentials == rep.expected_differentials && 2 * rep.expected_differentials == sc.dim() + r;

    const std::vector<Lambda> samples{Lambda(1, 0), Lambda(0, 1), Lambda(1, 1), Lambda(2, -1), Lambda(-3, 5)};
    rep.involutive = involutivity_check(tt, pair, x, samples);
    rep.generators_in_kernel = true;
    for (const Lambda& lam : samples) {
        const Mat m = eval(pencil, lam);
        for (const Vec& alpha : web_generators(tt, lam, x)) {
            if (!is_zero(m * alpha)) rep.generators_in_kernel = false;
        }
    }
    const CasimirCertificate cert = certify_casimirs(sc, cs, seed);
    rep.casimirs_certified = cert.ok;
    rep.casimirs_sampled_only = cert.sampled_only;
    return rep;
}

Witness find_generic_witness(const StructureConstants& sc, std::uint64_t seed, std::size_t max_attempts)
{
    RationalSequence seq(seed);
    const PolyMultiVec c1 = lie_poisson_bivector(sc);
    for (std::size_t attempt = 1; attempt <= max_attempts; ++attempt) {
        Witness w{seq.vector(sc.dim()), seq.vector(sc.dim()), attempt};
        const Mat c2 = eval_bivector(c1, w.a);
        if (c2.is_zero()) continue;
        if (analyze(SkewPencil(eval_bivector(c1, w.x), c2)).complete) return w;
    }
    throw Error(ErrorCode::VerificationFailed,
                "no complete witness point found in " + std::to_string(max_attempts) + " seeded attempts");
}

} // namespace veronese
