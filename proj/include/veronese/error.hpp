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

#include <stdexcept>
#include <string>
#include <string_view>

namespace veronese {

enum class ErrorCode {
    InvalidArgument,
    DimensionMismatch,
    ParseError,
    NotSkew,
    NotComplete,
    NonSimple,
    DependentGenerators,
    JacobiFails,
    ZeroShift,
    DependentPair,
    IncompletePoint,
    VerificationFailed,
};

std::string_view error_code_name(ErrorCode code) noexcept;

/// Every failure raised by the library carries a stable code so that front ends can
/// map it onto exit statuses and structured reports.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), m_code(code) {}

    ErrorCode code() const noexcept { return m_code; }

private:
    ErrorCode m_code;
};

} // namespace veronese
