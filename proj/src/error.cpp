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

namespace veronese {

std::string_view error_code_name(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotSkew: return "NotSkew";
    case ErrorCode::NotComplete: return "NotComplete";
    case ErrorCode::NonSimple: return "NonSimple";
    case ErrorCode::DependentGenerators: return "DependentGenerators";
    case ErrorCode::JacobiFails: return "JacobiFails";
    case ErrorCode::ZeroShift: return "ZeroShift";
    case ErrorCode::DependentPair: return "DependentPair";
    case ErrorCode::IncompletePoint: return "IncompletePoint";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    }
    return "Unknown";
}

} // namespace veronese
