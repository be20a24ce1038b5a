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
#include <veronese/formcalc.hpp>

#include <algorithm>
#include <array>

namespace veronese {

int sort_with_sign(std::vector<std::size_t>& index)
{
    int sign = 1;
    // insertion sort, counting transpositions
    for (std::size_t i = 1; i < index.size(); ++i) {
        for (std::size_t j = i; j > 0 && index[j - 1] > index[j]; --j) {
            std::swap(index[j - 1], index[j]);
            sign = -sign;
        }
    }
    if (std::adjacent_find(index.begin(), index.end()) != index.end()) return 0;
    return sign;
}

template <Variance V>
void AntisymTensor<V>::add(Index index, const MultiPoly& coefficient)
{
    if (index.size() != m_degree) throw Error(ErrorCode::DimensionMismatch, "tensor index has the wrong length");
    if (coefficient.is_zero()) return;
    if (!same_vars(coefficient.vars(), m_vars)) {
        throw Error(ErrorCode::DimensionMismatch, "tensor component over a different variable list");
    }
    for (auto i : index) {
        if (i >= n_vars()) throw Error(ErrorCode::InvalidArgument, "tensor index out of range");
    }
    const int sign = sort_with_sign(index);
    if (sign == 0) return;
    auto [it, inserted] = m_components.try_emplace(index, MultiPoly(m_vars));
    if (sign > 0) {
        it->second += coefficient;
    } else {
        it->second -= coefficient;
    }
    if (it->second.is_zero()) m_components.erase(it);
}

template <Variance V>
MultiPoly AntisymTensor<V>::get(Index index) const
{
    const int sign = sort_with_sign(index);
    if (sign == 0) return MultiPoly(m_vars);
    const auto it = m_components.find(index);
    if (it == m_components.end()) return MultiPoly(m_vars);
    return sign > 0 ? it->second : -it->second;
}

template <Variance V>
void AntisymTensor<V>::check_compatible(const AntisymTensor& other) const
{
    if (m_degree != other.m_degree || !same_vars(m_vars, other.m_vars)) {
        throw Error(ErrorCode::DimensionMismatch, "tensors of different degree or variables");
    }
}

template <Variance V>
AntisymTensor<V>& AntisymTensor<V>::operator+=(const AntisymTensor& other)
{
    check_compatible(other);
    for (const auto& [idx, c] : other.m_components) add(idx, c);
    return *this;
}

template <Variance V>
AntisymTensor<V>& AntisymTensor<V>::operator-=(const AntisymTensor& other)
{
    check_compatible(other);
    for (const auto& [idx, c] : other.m_components) add(idx, -c);
    return *this;
}

template <Variance V>
AntisymTensor<V>& AntisymTensor<V>::operator*=(const MultiPoly& f)
{
    Components next;
    for (auto& [idx, c] : m_components) {
        MultiPoly prod = c * f;
        if (!prod.is_zero()) next.emplace(idx, std::move(prod));
    }
    m_components = std::move(next);
    return *this;
}

template <Variance V>
AntisymTensor<V>& AntisymTensor<V>::operator*=(const Scalar& c)
{
    if (sgn(c) == 0) {
        m_components.clear();
        return *this;
    }
    for (auto& [idx, p] : m_components) p *= c;
    return *this;
}

template class AntisymTensor<Variance::Covariant>;
template class AntisymTensor<Variance::Contravariant>;

PolyForm coordinate_form(const VarNames& vars, std::size_t i)
{
    PolyForm f(vars, 1);
    f.add({i}, MultiPoly::constant(vars, 1));
    return f;
}

PolyMultiVec coordinate_field(const VarNames& vars, std::size_t i)
{
    PolyMultiVec f(vars, 1);
    f.add({i}, MultiPoly::constant(vars, 1));
    return f;
}

template <Variance V>
AntisymTensor<V> function_tensor(const MultiPoly& f)
{
    AntisymTensor<V> t(f.vars(), 0);
    t.add({}, f);
    return t;
}

template PolyForm function_tensor<Variance::Covariant>(const MultiPoly&);
template PolyMultiVec function_tensor<Variance::Contravariant>(const MultiPoly&);

template <Variance V>
AntisymTensor<V> wedge(const AntisymTensor<V>& a, const AntisymTensor<V>& b)
{
    if (!same_vars(a.vars(), b.vars())) throw Error(ErrorCode::DimensionMismatch, "wedge: different variables");
    AntisymTensor<V> out(a.vars(), a.degree() + b.degree());
    if (out.degree() > a.n_vars()) return out;
    for (const auto& [ia, fa] : a.components()) {
        for (const auto& [ib, fb] : b.components()) {
            std::vector<std::size_t> idx = ia;
            idx.insert(idx.end(), ib.begin(), ib.end());
            out.add(std::move(idx), fa * fb);
        }
    }
    return out;
}

template PolyForm wedge(const PolyForm&, const PolyForm&);
template PolyMultiVec wedge(const PolyMultiVec&, const PolyMultiVec&);

PolyForm exterior_d(const PolyForm& a)
{
    PolyForm out(a.vars(), a.degree() + 1);
    if (out.degree() > a.n_vars()) return out;
    for (const auto& [idx, f] : a.components()) {
        for (std::size_t k = 0; k < a.n_vars(); ++k) {
            MultiPoly df = f.derivative(k);
            if (df.is_zero()) continue;
            std::vector<std::size_t> next{k};
            next.insert(next.end(), idx.begin(), idx.end());
            out.add(std::move(next), df);
        }
    }
    return out;
}

namespace {

// Full antisymmetric coefficient array of a bivector.
std::vector<std::vector<MultiPoly>> dense_bivector(const PolyMultiVec& p)
{
    const std::size_t n = p.n_vars();
    std::vector<std::vector<MultiPoly>> m(n, std::vector<MultiPoly>(n, MultiPoly(p.vars())));
    for (const auto& [idx, f] : p.components()) {
        m[idx[0]][idx[1]] = f;
        m[idx[1]][idx[0]] = -f;
    }
    return m;
}

void require_bivector(const PolyMultiVec& p)
{
    if (p.degree() != 2) throw Error(ErrorCode::InvalidArgument, "expected a bivector");
}

} // namespace

PolyMultiVec schouten(const PolyMultiVec& p, const PolyMultiVec& q)
{
    require_bivector(p);
    require_bivector(q);
    if (!same_vars(p.vars(), q.vars())) throw Error(ErrorCode::DimensionMismatch, "schouten: different variables");
    const std::size_t n = p.n_vars();
    const auto pm = dense_bivector(p);
    const auto qm = dense_bivector(q);

    // derivatives d_l of the stored components, keyed by (l, i, j) with i < j
    std::map<std::array<std::size_t, 3>, MultiPoly> dp;
    std::map<std::array<std::size_t, 3>, MultiPoly> dq;
    for (std::size_t l = 0; l < n; ++l) {
        for (const auto& [idx, f] : p.components()) {
            MultiPoly d = f.derivative(l);
            if (!d.is_zero()) dp.emplace(std::array{l, idx[0], idx[1]}, std::move(d));
        }
        for (const auto& [idx, f] : q.components()) {
            MultiPoly d = f.derivative(l);
            if (!d.is_zero()) dq.emplace(std::array{l, idx[0], idx[1]}, std::move(d));
        }
    }
    auto deriv = [](const std::map<std::array<std::size_t, 3>, MultiPoly>& table, std::size_t l, std::size_t b,
                    std::size_t c, int& sign) -> const MultiPoly* {
        sign = 1;
        if (b > c) {
            std::swap(b, c);
            sign = -1;
        }
        const auto it = table.find({l, b, c});
        return it == table.end() ? nullptr : &it->second;
    };

    PolyMultiVec out(p.vars(), 3);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                MultiPoly acc(p.vars());
                const std::array<std::array<std::size_t, 3>, 3> cyc{{{i, j, k}, {j, k, i}, {k, i, j}}};
                for (const auto& [a, b, c] : cyc) {
                    for (std::size_t l = 0; l < n; ++l) {
                        int sign = 1;
                        if (!pm[l][a].is_zero()) {
                            if (const MultiPoly* d = deriv(dq, l, b, c, sign)) {
                                acc += sign > 0 ? pm[l][a] * (*d) : -(pm[l][a] * (*d));
                            }
                        }
                        if (!qm[l][a].is_zero()) {
                            if (const MultiPoly* d = deriv(dp, l, b, c, sign)) {
                                acc += sign > 0 ? qm[l][a] * (*d) : -(qm[l][a] * (*d));
                            }
                        }
                    }
                }
                out.add({i, j, k}, acc);
            }
        }
    }
    return out;
}

bool jacobi_check(const PolyMultiVec& p) { return schouten(p, p).is_zero(); }

PairVerdict pair_report(const PolyMultiVec& p, const PolyMultiVec& q)
{
    PairVerdict v;
    v.first_bracket = schouten(p, p);
    v.second_bracket = schouten(q, q);
    v.mixed_bracket = schouten(p, q);
    v.first_poisson = v.first_bracket.is_zero();
    v.second_poisson = v.second_bracket.is_zero();
    v.compatible = v.mixed_bracket.is_zero();
    return v;
}

bool pair_check(const PolyMultiVec& p, const PolyMultiVec& q) { return pair_report(p, q).ok(); }

Mat eval_bivector(const PolyMultiVec& p, const Vec& point)
{
    require_bivector(p);
    if (point.size() != p.n_vars()) throw Error(ErrorCode::DimensionMismatch, "eval_bivector: point dimension");
    const std::size_t n = p.n_vars();
    Mat m(n, n);
    for (const auto& [idx, f] : p.components()) {
        const Scalar v = f.evaluate(point);
        m(idx[0], idx[1]) = v;
        m(idx[1], idx[0]) = -v;
    }
    return m;
}

PolyMultiVec bivector_from_matrix(const VarNames& vars, const Mat& m)
{
    if (!m.is_skew() || m.rows() != vars->size()) {
        throw Error(ErrorCode::NotSkew, "bivector_from_matrix needs a skew matrix of matching size");
    }
    PolyMultiVec out(vars, 2);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = i + 1; j < m.cols(); ++j) {
            if (sgn(m(i, j)) != 0) out.add({i, j}, MultiPoly::constant(vars, m(i, j)));
        }
    }
    return out;
}

template <Variance V>
AntisymTensor<V> evaluate_at(const AntisymTensor<V>& t, const Vec& point)
{
    AntisymTensor<V> out(t.vars(), t.degree());
    for (const auto& [idx, f] : t.components()) out.add(idx, MultiPoly::constant(t.vars(), f.evaluate(point)));
    return out;
}

template PolyForm evaluate_at(const PolyForm&, const Vec&);
template PolyMultiVec evaluate_at(const PolyMultiVec&, const Vec&);

namespace {

std::size_t pointwise_rank(const std::vector<PolyForm>& gens, const Vec& point)
{
    const std::size_t n = gens.front().n_vars();
    Mat m(gens.size(), n);
    for (std::size_t r = 0; r < gens.size(); ++r) {
        for (const auto& [idx, f] : gens[r].components()) m(r, idx[0]) = f.evaluate(point);
    }
    return rank(m);
}

} // namespace

bool frobenius_check(const std::vector<PolyForm>& generators, const std::optional<Vec>& at)
{
    if (generators.empty()) return true;
    const VarNames& vars = generators.front().vars();
    const std::size_t n = generators.front().n_vars();
    for (const auto& g : generators) {
        if (g.degree() != 1) throw Error(ErrorCode::InvalidArgument, "frobenius_check expects 1-forms");
        if (!same_vars(g.vars(), vars)) throw Error(ErrorCode::DimensionMismatch, "generators over different variables");
    }
    if (at) {
        if (at->size() != n) throw Error(ErrorCode::DimensionMismatch, "frobenius_check: point dimension");
        if (pointwise_rank(generators, *at) != generators.size()) {
            throw Error(ErrorCode::DependentGenerators, "generators are dependent at the test point");
        }
    } else {
        bool independent = false;
        for (long t = 0; t < 4 && !independent; ++t) {
            Vec pt(n);
            for (std::size_t i = 0; i < n; ++i) pt[i] = (7 * static_cast<long>(i + 1) * (t + 1) + 3 * t) % 13 - 6;
            independent = pointwise_rank(generators, pt) == generators.size();
        }
        if (!independent) throw Error(ErrorCode::DependentGenerators, "generators are dependent at every sample point");
    }

    PolyForm omega = function_tensor<Variance::Covariant>(MultiPoly::constant(vars, 1));
    for (const auto& g : generators) omega = wedge(omega, g);
    for (const auto& g : generators) {
        PolyForm t = wedge(exterior_d(g), omega);
        if (at) t = evaluate_at(t, *at);
        if (!t.is_zero()) return false;
    }
    return true;
}

} // namespace veronese
