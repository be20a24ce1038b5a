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

// JSON documents for pencils, multivector fields, forms and structure constants.
// Rationals are written as strings ("3", "-2/5"); integers are also accepted on input.
// Multivector and form components use 1-based indices.

#include <veronese/fixtures.hpp>
#include <veronese/formcalc.hpp>
#include <veronese/liealg.hpp>
#include <veronese/pencil.hpp>

#include <json.hpp>

#include <string>

namespace veronese {

using Json = nlohmann::ordered_json;

Json read_json_file(const std::string& path);
Json parse_json_text(const std::string& text, const std::string& origin);

Json scalar_json(const Scalar& q);
Scalar scalar_from_json(const Json& j);

Json vec_json(const Vec& v);
Vec vec_from_json(const Json& j);

Json mat_json(const Mat& m);
Mat mat_from_json(const Json& j);

/// {"dim": N, "A": [[...]], "B": [[...]]}
Json pencil_json(const SkewPencil& p);
SkewPencil pencil_from_json(const Json& j);

/// {"n_vars": n, "degree": d, "vars": [...], "components": [{"idx": [i, j], "poly": "..."}]}
/// "vars" is optional and defaults to x1..xn; `shared` overrides it when given.
Json multivec_json(const PolyMultiVec& t);
PolyMultiVec multivec_from_json(const Json& j, const VarNames& shared = nullptr);
Json form_json(const PolyForm& t);
PolyForm form_from_json(const Json& j, const VarNames& shared = nullptr);

/// {"vars": [...], "c1": <multivector>, "c2": <multivector>}
Json pair_json(const BivectorPair& p);
BivectorPair pair_from_json(const Json& j);
bool is_pair_document(const Json& j);

/// {"dim": n, "brackets": [[i, j, k, "c"], ...], "labels": [...]} with 1-based i < j.
Json structure_json(const StructureConstants& sc);
StructureConstants structure_from_json(const Json& j);

/// A list of polynomial strings in the algebra's variables.
std::vector<MultiPoly> casimirs_from_json(const Json& j, const VarNames& vars);

} // namespace veronese
