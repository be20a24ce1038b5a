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

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace veronese {

using Exponent = std::vector<std::uint32_t>;

/// Graded lexicographic order: higher total degree first, ties broken lexicographically
/// with earlier variables dominant. Iterating a term map visits the leading term first.
struct GrlexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Shared, immutable list of indeterminate names.
using VarNames = std::shared_ptr<const std::vector<std::string>>;

VarNames make_vars(std::vector<std::string> names);
/// x1, ..., xn (or prefix1, ..., prefixn).
VarNames indexed_vars(std::size_t n, std::string_view prefix = "x");
bool same_vars(const VarNames& a, const VarNames& b);

/// Sparse multivariate polynomial with rational coefficients. No zero coefficient is
/// ever stored, so equality of values is equality of representations.
class MultiPoly {
public:
    using Terms = std::map<Exponent, Scalar, GrlexGreater>;

    MultiPoly() = default;
    explicit MultiPoly(VarNames vars);

    static MultiPoly constant(VarNames vars, const Scalar& c);
    static MultiPoly variable(VarNames vars, std::size_t index);
    static MultiPoly monomial(VarNames vars, Exponent e, const Scalar& c);

    const VarNames& vars() const noexcept { return m_vars; }
    std::size_t nvars() const noexcept { return m_vars ? m_vars->size() : 0; }
    const Terms& terms() const noexcept { return m_terms; }

    bool is_zero() const noexcept { return m_terms.empty(); }
    bool is_constant() const;
    /// Total degree; -1 for the zero polynomial.
    int total_degree() const;
    bool is_homogeneous() const;
    /// Coefficient of the monomial with exponent e (0 when absent).
    Scalar coefficient(const Exponent& e) const;

    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly& operator-=(const MultiPoly& other);
    MultiPoly& operator*=(const Scalar& c);
    MultiPoly operator-() const;

    /// Adds c * x^e.
    void add_term(const Exponent& e, const Scalar& c);

    MultiPoly derivative(std::size_t var) const;
    /// Homogeneous component of total degree d.
    MultiPoly homogeneous_part(std::size_t d) const;
    Scalar evaluate(std::span<const Scalar> point) const;
    /// Replaces variable i by images[i]; all images must share one variable list.
    MultiPoly compose(const std::vector<MultiPoly>& images) const;
    /// The same polynomial expressed over a larger variable list whose first nvars()
    /// names coincide with ours.
    MultiPoly extend_vars(VarNames bigger) const;

    std::string to_string() const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

private:
    void check_compatible(const MultiPoly& other) const;

    VarNames m_vars;
    Terms m_terms;
};

MultiPoly operator+(MultiPoly a, const MultiPoly& b);
MultiPoly operator-(MultiPoly a, const MultiPoly& b);
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator*(MultiPoly a, const Scalar& c);
MultiPoly operator*(const Scalar& c, MultiPoly a);
MultiPoly pow(const MultiPoly& p, unsigned k);

/// Gradient evaluated at a point.
Vec gradient_at(const MultiPoly& p, std::span<const Scalar> point);

/// Parses a polynomial over `vars`.
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ['^' integer]
///   atom   := integer ['/' integer] | name | '(' expr ')'
///
/// Names must appear in `vars`; "3/2*x" reads the literal 3/2 first.
MultiPoly parse_poly(std::string_view text, const VarNames& vars);

} // namespace veronese
