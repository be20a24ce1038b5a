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
#include <veronese/scalar.hpp>

#include <cctype>

namespace veronese {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

mpz_class parse_integer(std::string_view s)
{
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

} // namespace

Scalar parse_scalar(std::string_view text)
{
    const std::string_view s = trim(text);
    const auto slash = s.find('/');
    const std::string_view num = trim(s.substr(0, slash));
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                                 : trim(s.substr(slash + 1));
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
        den.front() == '+') {
        throw Error(ErrorCode::ParseError, "malformed rational literal '" + std::string(text) + "'");
    }
    const mpz_class q = parse_integer(den);
    if (q == 0) {
        throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    }
    Scalar value(parse_integer(num), q);
    value.canonicalize();
    return value;
}

std::string to_string(const Scalar& value)
{
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Vec parse_scalar_list(std::string_view csv)
{
    Vec out;
    if (trim(csv).empty()) return out;
    std::size_t start = 0;
    while (true) {
        const auto comma = csv.find(',', start);
        out.push_back(parse_scalar(csv.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

Scalar dot(const Vec& a, const Vec& b)
{
    if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot: length mismatch");
    Scalar s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
    }
    return s;
}

bool is_zero(const Vec& v)
{
    for (const auto& x : v) {
        if (sgn(x) != 0) return false;
    }
    return true;
}

} // namespace veronese
