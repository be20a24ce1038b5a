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

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace veronese {

/// Exact rational number. GMP keeps the value canonical (coprime, positive
/// denominator, zero as 0/1) after every arithmetic operation.
using Scalar = mpq_class;

using Vec = std::vector<Scalar>;

/// Parses "p", "-p" or "p/q". Throws Error(ParseError) on anything else or on q = 0.
Scalar parse_scalar(std::string_view text);

/// Renders as "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Scalar& value);

/// Comma-separated rationals, e.g. "1,-2,3/4". Whitespace around entries is ignored.
Vec parse_scalar_list(std::string_view csv);

Scalar dot(const Vec& a, const Vec& b);

bool is_zero(const Vec& v);

} // namespace veronese
