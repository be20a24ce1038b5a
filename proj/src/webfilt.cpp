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
#include <veronese/webfilt.hpp>

#include <algorithm>

namespace veronese {

namespace {

Lambda pool_parameter(std::size_t m)
{
    if (m == 0) return Lambda(1, 0);
    if (m == 1) return Lambda(0, 1);
    return Lambda(1, static_cast<long>(m - 1));
}

void require_simple(const std::vector<std::size_t>& indices)
{
    if (std::adjacent_find(indices.begin(), indices.end()) != indices.end()) {
        throw Error(ErrorCode::NonSimple, "minimal indices repeat; the web needs distinct indices");
    }
}

PencilAnalysis require_complete_simple(const SkewPencil& p)
{
    PencilAnalysis an = analyze(p);
    if (!an.complete) throw Error(ErrorCode::NotComplete, "pencil has a Jordan part");
    require_simple(an.minimal_indices);
    return an;
}

// Accumulate intersections of the subsets that contain the newest kernel. Any subtree whose
// intersection already lies in every deeper Phi_j cannot contribute.
class PhiAccumulator {
public:
    PhiAccumulator(std::vector<Subspace>& phi, const std::vector<Subspace>& kernels) : m_phi(phi), m_kernels(kernels) {}

    bool add_newest()
    {
        m_changed = false;
        const std::size_t newest = m_kernels.size() - 1;
        visit(m_kernels[newest], 1, newest);
        return m_changed;
    }

private:
    void visit(const Subspace& kernel_sum, std::size_t size, std::size_t below)
    {
        const Subspace meet = annihilator(kernel_sum);
        if (!m_phi[size].contains(meet)) {
            m_phi[size] = subspace_sum(m_phi[size], meet);
            m_changed = true;
        }
        const std::size_t top = m_phi.size() - 1;
        if (size == top) return;
        bool useful = false;
        for (std::size_t j = size + 1; j <= top && j <= size + below; ++j) {
            if (!m_phi[j].contains(meet)) {
                useful = true;
                break;
            }
        }
        if (!useful) return;
        for (std::size_t s = below; s-- > 0;) {
            visit(subspace_sum(kernel_sum, m_kernels[s]), size + 1, s);
        }
    }

    std::vector<Subspace>& m_phi;
    const std::vector<Subspace>& m_kernels;
    bool m_changed = false;
};

} // namespace

std::vector<std::size_t> PhiChain::dims() const
{
    std::vector<std::size_t> out;
    for (const auto& s : chain) out.push_back(s.dim());
    return out;
}

std::vector<std::size_t> IsotypicFiltration::dims() const
{
    std::vector<std::size_t> out;
    for (const auto& s : levels) out.push_back(s.dim());
    return out;
}

PhiChain phi_chain(const SkewPencil& p)
{
    const std::size_t n = p.dim();
    const std::size_t top = (n == 0 ? 0 : (n - 1) / 2) + 2;

    std::vector<Subspace> phi(top + 1, Subspace::zero(n));
    phi[0] = Subspace::full(n);
    std::vector<Subspace> kernels;
    PhiAccumulator acc(phi, kernels);

    std::size_t quiet = 0;
    while (kernels.size() < top || quiet < 3) {
        kernels.push_back(nullspace(eval(p, pool_parameter(kernels.size()))));
        quiet = acc.add_newest() ? 0 : quiet + 1;
    }

    std::size_t stable = top;
    while (stable > 0 && phi[stable - 1] == phi[top]) --stable;

    PhiChain out;
    out.chain.assign(phi.begin(), phi.begin() + static_cast<std::ptrdiff_t>(stable + 1));
    out.stabilized_at = stable;
    out.parameters_used = kernels.size();
    return out;
}

bool verify_phi_chain(const PhiChain& chain, const std::vector<std::size_t>& indices)
{
    std::vector<std::size_t> idx = indices;
    std::sort(idx.begin(), idx.end());
    require_simple(idx);
    if (idx.empty() || chain.chain.empty()) return false;

    const std::size_t last = idx.back() + 1;
    if (chain.stabilized_at != last || chain.chain.size() != last + 1) return false;
    for (std::size_t i = 0; i < chain.chain.size(); ++i) {
        std::size_t expected = 0;
        for (auto nl : idx) expected += nl < i ? nl : 2 * nl + 1;
        if (chain.chain[i].dim() != expected) return false;
        if (i > 0 && !chain.chain[i - 1].contains(chain.chain[i])) return false;
    }
    return true;
}

IsotypicFiltration isotypic_filtration(const SkewPencil& p, const PhiChain& chain)
{
    const PencilAnalysis an = require_complete_simple(p);
    const auto& idx = an.minimal_indices;
    const std::size_t k = idx.size();
    IsotypicFiltration out;
    out.jumps = idx;
    out.levels.push_back(Subspace::zero(p.dim()));
    for (std::size_t j = 1; j < k; ++j) {
        if (idx[j] >= chain.chain.size()) {
            throw Error(ErrorCode::VerificationFailed, "chain too short for the filtration");
        }
        out.levels.push_back(annihilator(chain.chain[idx[j]]));
    }
    out.levels.push_back(annihilator(chain.chain.back()));
    return out;
}

Vec VeroneseCurveData::point(const Lambda& lambda) const
{
    Vec out(coords.cols());
    for (std::size_t i = 0; i <= degree; ++i) {
        Scalar w = 1;
        for (std::size_t e = 0; e < degree - i; ++e) w *= lambda.l1();
        for (std::size_t e = 0; e < i; ++e) w *= lambda.l2();
        for (std::size_t c = 0; c < out.size(); ++c) out[c] += w * coords(i, c);
    }
    return out;
}

namespace {

// Canonical complement of lower inside upper: reduce upper's basis modulo lower.
Subspace complement_in(const Subspace& upper, const Subspace& lower)
{
    Mat reduced(0, upper.ambient_dim());
    for (std::size_t r = 0; r < upper.dim(); ++r) reduced.append_row(lower.reduce(upper.basis().row(r)));
    return Subspace::span(reduced);
}

} // namespace

std::vector<VeroneseCurveData> graded_curves(const SkewPencil& p, const IsotypicFiltration& filtration)
{
    require_complete_simple(p);
    const auto kernel_basis = minimal_kernel_basis(p);
    const std::size_t k = filtration.jumps.size();
    if (filtration.levels.size() != k + 1) throw Error(ErrorCode::InvalidArgument, "filtration does not match its jumps");

    std::vector<VeroneseCurveData> out;
    for (std::size_t j = 1; j <= k; ++j) {
        const std::size_t n = filtration.jumps[j - 1];
        const auto it = std::find_if(kernel_basis.begin(), kernel_basis.end(),
                                     [n](const PolyKernelVector& v) { return v.degree == n; });
        if (it == kernel_basis.end()) throw Error(ErrorCode::VerificationFailed, "no kernel vector of the level degree");

        const Subspace& lower = filtration.levels[j - 1];
        const Subspace& upper = filtration.levels[j];
        const Subspace complement = complement_in(upper, lower);

        VeroneseCurveData curve;
        curve.level = j;
        curve.degree = n;
        curve.quotient_dim = complement.dim();
        curve.coords = Mat(n + 1, complement.dim());
        for (std::size_t i = 0; i <= n; ++i) {
            if (!upper.contains(it->coeffs[i])) {
                throw Error(ErrorCode::VerificationFailed, "kernel coefficient outside its filtration level");
            }
            Vec rep = lower.reduce(it->coeffs[i]);
            const Vec c = complement.coordinates(rep);
            for (std::size_t col = 0; col < c.size(); ++col) curve.coords(i, col) = c[col];
            curve.representatives.push_back(std::move(rep));
        }
        out.push_back(std::move(curve));
    }
    return out;
}

bool veronese_check(const VeroneseCurveData& curve)
{
    const std::size_t n = curve.degree;
    if (curve.coords.rows() != n + 1) return false;
    if (is_zero(curve.coords.row_vec(0)) || is_zero(curve.coords.row_vec(n))) return false;
    if (rank(curve.coords) != n + 1) return false;
    Mat points(0, curve.coords.cols());
    for (std::size_t t = 0; t <= n; ++t) points.append_row(curve.point(Lambda(1, static_cast<long>(t))));
    return rank(points) == n + 1;
}

InfinitesimalWeb build_infinitesimal_web(const SkewPencil& p)
{
    InfinitesimalWeb web;
    web.analysis = require_complete_simple(p);
    web.chain = phi_chain(p);
    web.filtration = isotypic_filtration(p, web.chain);
    web.curves = graded_curves(p, web.filtration);
    web.web_dim = p.dim() - web.analysis.bilagrangian.dim();

    const auto& idx = web.analysis.minimal_indices;
    const auto& levels = web.filtration.levels;
    const std::size_t k = idx.size();
    WebVerdict& v = web.verdict;

    v.phi_dimensions = verify_phi_chain(web.chain, idx) && web.chain.chain.back() == web.analysis.bilagrangian;

    v.filtration_ranks = true;
    for (std::size_t j = 1; j <= k; ++j) {
        if (!levels[j].contains(levels[j - 1]) || levels[j].dim() - levels[j - 1].dim() != idx[j - 1] + 1) {
            v.filtration_ranks = false;
        }
    }

    v.veronese = std::all_of(web.curves.begin(), web.curves.end(), veronese_check);

    std::vector<Lambda> samples{Lambda(1, 0), Lambda(0, 1), Lambda(2, -3)};
    for (std::size_t t = 1; t <= idx.back() + 2; ++t) samples.emplace_back(1, static_cast<long>(t));

    v.induced_ranks = true;
    v.curve_points = true;
    for (const Lambda& lam : samples) {
        const Subspace ker = nullspace(eval(p, lam));
        if (ker.dim() != k) v.induced_ranks = false;
        for (std::size_t j = 1; j <= k; ++j) {
            const Subspace meet = subspace_intersect(levels[j], ker);
            if (meet.dim() != j) v.induced_ranks = false;

            const VeroneseCurveData& curve = web.curves[j - 1];
            Vec rep(p.dim());
            for (std::size_t i = 0; i <= curve.degree; ++i) {
                Scalar w = 1;
                for (std::size_t e = 0; e < curve.degree - i; ++e) w *= lam.l1();
                for (std::size_t e = 0; e < i; ++e) w *= lam.l2();
                for (std::size_t c = 0; c < rep.size(); ++c) rep[c] += w * curve.representatives[i][c];
            }
            const Subspace target = subspace_sum(meet, levels[j - 1]);
            if (levels[j - 1].contains(rep) || !target.contains(rep) || target.dim() != levels[j - 1].dim() + 1) {
                v.curve_points = false;
            }
        }
    }
    return web;
}

} // namespace veronese
