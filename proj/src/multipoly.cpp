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
#include <veronese/multipoly.hpp>

#include <algorithm>
#include <cctype>
#include <numeric>

namespace veronese {

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const
{
    const auto da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
    const auto db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

VarNames make_vars(std::vector<std::string> names)
{
    return std::make_shared<const std::vector<std::string>>(std::move(names));
}

VarNames indexed_vars(std::size_t n, std::string_view prefix)
{
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) names.push_back(std::string(prefix) + std::to_string(i));
    return make_vars(std::move(names));
}

bool same_vars(const VarNames& a, const VarNames& b)
{
    if (a == b) return true;
    if (!a || !b) return (!a || a->empty()) && (!b || b->empty());
    return *a == *b;
}

MultiPoly::MultiPoly(VarNames vars) : m_vars(std::move(vars)) {}

MultiPoly MultiPoly::constant(VarNames vars, const Scalar& c)
{
    MultiPoly p(std::move(vars));
    p.add_term(Exponent(p.nvars(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(VarNames vars, std::size_t index)
{
    MultiPoly p(std::move(vars));
    if (index >= p.nvars()) throw Error(ErrorCode::InvalidArgument, "variable index out of range");
    Exponent e(p.nvars(), 0);
    e[index] = 1;
    p.add_term(e, 1);
    return p;
}

MultiPoly MultiPoly::monomial(VarNames vars, Exponent e, const Scalar& c)
{
    MultiPoly p(std::move(vars));
    if (e.size() != p.nvars()) throw Error(ErrorCode::DimensionMismatch, "monomial exponent length");
    p.add_term(e, c);
    return p;
}

bool MultiPoly::is_constant() const
{
    return m_terms.empty() ||
           (m_terms.size() == 1 &&
            std::all_of(m_terms.begin()->first.begin(), m_terms.begin()->first.end(),
                        [](std::uint32_t x) { return x == 0; }));
}

int MultiPoly::total_degree() const
{
    if (m_terms.empty()) return -1;
    const auto& e = m_terms.begin()->first;
    return static_cast<int>(std::accumulate(e.begin(), e.end(), std::uint64_t{0}));
}

bool MultiPoly::is_homogeneous() const
{
    if (m_terms.empty()) return true;
    const auto d = static_cast<std::uint64_t>(total_degree());
    return std::all_of(m_terms.begin(), m_terms.end(), [d](const auto& t) {
        return std::accumulate(t.first.begin(), t.first.end(), std::uint64_t{0}) == d;
    });
}

Scalar MultiPoly::coefficient(const Exponent& e) const
{
    const auto it = m_terms.find(e);
    return it == m_terms.end() ? Scalar(0) : it->second;
}

void MultiPoly::check_compatible(const MultiPoly& other) const
{
    if (!same_vars(m_vars, other.m_vars)) {
        throw Error(ErrorCode::DimensionMismatch, "polynomials over different variable lists");
    }
}

void MultiPoly::add_term(const Exponent& e, const Scalar& c)
{
    if (sgn(c) == 0) return;
    auto [it, inserted] = m_terms.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) m_terms.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other)
{
    check_compatible(other);
    if (!m_vars) m_vars = other.m_vars;
    for (const auto& [e, c] : other.m_terms) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other)
{
    check_compatible(other);
    if (!m_vars) m_vars = other.m_vars;
    for (const auto& [e, c] : other.m_terms) add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Scalar& c)
{
    if (sgn(c) == 0) {
        m_terms.clear();
        return *this;
    }
    for (auto& [e, v] : m_terms) v *= c;
    return *this;
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly r = *this;
    for (auto& [e, v] : r.m_terms) v = -v;
    return r;
}

MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
MultiPoly operator*(MultiPoly a, const Scalar& c) { return a *= c; }
MultiPoly operator*(const Scalar& c, MultiPoly a) { return a *= c; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
    if (!same_vars(a.vars(), b.vars())) {
        throw Error(ErrorCode::DimensionMismatch, "polynomials over different variable lists");
    }
    MultiPoly out(a.vars() ? a.vars() : b.vars());
    Exponent e;
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            e = ea;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly pow(const MultiPoly& p, unsigned k)
{
    MultiPoly result = MultiPoly::constant(p.vars(), 1);
    MultiPoly base = p;
    while (k > 0) {
        if (k & 1U) result = result * base;
        k >>= 1U;
        if (k > 0) base = base * base;
    }
    return result;
}

MultiPoly MultiPoly::derivative(std::size_t var) const
{
    if (var >= nvars()) throw Error(ErrorCode::InvalidArgument, "derivative: variable out of range");
    MultiPoly out(m_vars);
    for (const auto& [e, c] : m_terms) {
        if (e[var] == 0) continue;
        Exponent d = e;
        --d[var];
        out.add_term(d, c * e[var]);
    }
    return out;
}

MultiPoly MultiPoly::homogeneous_part(std::size_t d) const
{
    MultiPoly out(m_vars);
    for (const auto& [e, c] : m_terms) {
        if (std::accumulate(e.begin(), e.end(), std::uint64_t{0}) == d) out.m_terms.emplace(e, c);
    }
    return out;
}

Scalar MultiPoly::evaluate(std::span<const Scalar> point) const
{
    if (point.size() != nvars()) throw Error(ErrorCode::DimensionMismatch, "evaluate: point dimension");
    Scalar total = 0;
    Scalar term;
    for (const auto& [e, c] : m_terms) {
        term = c;
        for (std::size_t i = 0; i < e.size() && sgn(term) != 0; ++i) {
            for (std::uint32_t k = 0; k < e[i]; ++k) term *= point[i];
        }
        total += term;
    }
    return total;
}

MultiPoly MultiPoly::compose(const std::vector<MultiPoly>& images) const
{
    if (images.size() != nvars()) throw Error(ErrorCode::DimensionMismatch, "compose: image count");
    VarNames target = images.empty() ? m_vars : images.front().vars();
    // powers[i][k] = images[i]^k, filled lazily
    std::vector<std::vector<MultiPoly>> powers(images.size());
    auto power_of = [&](std::size_t i, std::uint32_t k) -> const MultiPoly& {
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(MultiPoly::constant(target, 1));
        while (pw.size() <= k) pw.push_back(pw.back() * images[i]);
        return pw[k];
    };
    MultiPoly out(target);
    for (const auto& [e, c] : m_terms) {
        MultiPoly term = MultiPoly::constant(target, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] > 0) term = term * power_of(i, e[i]);
        }
        out += term;
    }
    return out;
}

MultiPoly MultiPoly::extend_vars(VarNames bigger) const
{
    if (!bigger || bigger->size() < nvars() ||
        !std::equal(m_vars->begin(), m_vars->end(), bigger->begin())) {
        throw Error(ErrorCode::DimensionMismatch, "extend_vars: not an extension");
    }
    MultiPoly out(bigger);
    for (const auto& [e, c] : m_terms) {
        Exponent f = e;
        f.resize(bigger->size(), 0);
        out.m_terms.emplace(std::move(f), c);
    }
    return out;
}

std::string MultiPoly::to_string() const
{
    if (m_terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : m_terms) {
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += (*m_vars)[i];
            if (e[i] > 1) mono += '^' + std::to_string(e[i]);
        }
        const bool negative = sgn(c) < 0;
        const Scalar mag = abs(c);
        std::string body;
        if (mono.empty()) {
            body = veronese::to_string(mag);
        } else if (mag == 1) {
            body = mono;
        } else {
            body = veronese::to_string(mag) + "*" + mono;
        }
        if (first) {
            out = negative ? "-" + body : body;
        } else {
            out += negative ? " - " : " + ";
            out += body;
        }
        first = false;
    }
    return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b)
{
    if (a.m_terms.empty() && b.m_terms.empty()) return true;
    return same_vars(a.m_vars, b.m_vars) && a.m_terms == b.m_terms;
}

Vec gradient_at(const MultiPoly& p, std::span<const Scalar> point)
{
    Vec g(p.nvars());
    for (std::size_t i = 0; i < p.nvars(); ++i) g[i] = p.derivative(i).evaluate(point);
    return g;
}

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, const VarNames& vars) : m_text(text), m_vars(vars) {}

    MultiPoly parse()
    {
        MultiPoly p = expr();
        skip_space();
        if (m_pos != m_text.size()) fail("unexpected character");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw Error(ErrorCode::ParseError, "polynomial '" + std::string(m_text) + "': " + what +
                                               " at offset " + std::to_string(m_pos));
    }

    void skip_space()
    {
        while (m_pos < m_text.size() && std::isspace(static_cast<unsigned char>(m_text[m_pos]))) ++m_pos;
    }

    bool accept(char c)
    {
        skip_space();
        if (m_pos < m_text.size() && m_text[m_pos] == c) {
            ++m_pos;
            return true;
        }
        return false;
    }

    MultiPoly expr()
    {
        MultiPoly acc(m_vars);
        bool negate = false;
        if (accept('-')) {
            negate = true;
        } else {
            accept('+');
        }
        MultiPoly t = term();
        acc = negate ? -t : t;
        while (true) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                break;
            }
        }
        return acc;
    }

    MultiPoly term()
    {
        MultiPoly acc = factor();
        while (accept('*')) acc = acc * factor();
        return acc;
    }

    MultiPoly factor()
    {
        MultiPoly base = atom();
        if (accept('^')) {
            skip_space();
            const std::string digits = take_digits();
            if (digits.empty()) fail("expected exponent");
            base = pow(base, static_cast<unsigned>(std::stoul(digits)));
        }
        return base;
    }

    std::string take_digits()
    {
        const std::size_t start = m_pos;
        while (m_pos < m_text.size() && std::isdigit(static_cast<unsigned char>(m_text[m_pos]))) ++m_pos;
        return std::string(m_text.substr(start, m_pos - start));
    }

    MultiPoly atom()
    {
        skip_space();
        if (m_pos >= m_text.size()) fail("unexpected end of input");
        const char c = m_text[m_pos];
        if (c == '(') {
            ++m_pos;
            MultiPoly inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string lit = take_digits();
            skip_space();
            if (m_pos < m_text.size() && m_text[m_pos] == '/') {
                ++m_pos;
                skip_space();
                const std::string den = take_digits();
                if (den.empty()) fail("expected denominator");
                lit += "/" + den;
            }
            return MultiPoly::constant(m_vars, parse_scalar(lit));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = m_pos;
            while (m_pos < m_text.size() &&
                   (std::isalnum(static_cast<unsigned char>(m_text[m_pos])) || m_text[m_pos] == '_')) {
                ++m_pos;
            }
            const std::string name(m_text.substr(start, m_pos - start));
            const auto it = std::find(m_vars->begin(), m_vars->end(), name);
            if (it == m_vars->end()) fail("unknown variable '" + name + "'");
            return MultiPoly::variable(m_vars, static_cast<std::size_t>(it - m_vars->begin()));
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view m_text;
    const VarNames& m_vars;
    std::size_t m_pos = 0;
};

} // namespace

MultiPoly parse_poly(std::string_view text, const VarNames& vars)
{
    if (!vars) throw Error(ErrorCode::InvalidArgument, "parse_poly: no variable list");
    return PolyParser(text, vars).parse();
}

} // namespace veronese
