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

#include <veronese/cli.hpp>

#include <sstream>

namespace veronese {

int exit_code_for(ErrorCode code)
{
    return code == ErrorCode::VerificationFailed ? exit_verification : exit_input;
}

Json analysis_json(const PencilAnalysis& an)
{
    Json out;
    out["dim"] = an.dim;
    out["generic_rank"] = an.generic_rank;
    out["minimal_indices"] = an.minimal_indices;
    out["kronecker_dim"] = an.kronecker_dim;
    out["jordan_dim"] = an.jordan_dim;
    out["complete"] = an.complete;
    out["simple"] = an.simple;
    out["bilagrangian_dim"] = an.bilagrangian.dim();
    out["bilagrangian_basis"] = mat_json(an.bilagrangian.basis());
    out["half_rank"] = !an.complete || 2 * an.bilagrangian.dim() == an.generic_rank;
    return out;
}

Json basis_json(const KroneckerBasis& kb)
{
    Json out;
    out["block_layout"] = kb.block_layout;
    out["S"] = mat_json(kb.s);
    out["congruence_verified"] = true;
    return out;
}

Json pair_verdict_json(const PairVerdict& v)
{
    Json out;
    out["first_poisson"] = v.first_poisson;
    out["second_poisson"] = v.second_poisson;
    out["compatible"] = v.compatible;
    out["pass"] = v.ok();
    Json offending = Json::array();
    auto list = [&](const char* name, const PolyMultiVec& t) {
        for (const auto& [idx, poly] : t.components()) {
            Json e;
            e["bracket"] = name;
            Json ij = Json::array();
            for (auto i : idx) ij.push_back(i + 1);
            e["idx"] = ij;
            e["poly"] = poly.to_string();
            offending.push_back(e);
        }
    };
    list("[c1,c1]", v.first_bracket);
    list("[c2,c2]", v.second_bracket);
    list("[c1,c2]", v.mixed_bracket);
    out["nonzero_components"] = offending;
    return out;
}

Json web_json(const InfinitesimalWeb& web)
{
    Json out;
    out["type"] = web.analysis.minimal_indices;
    out["web_dim"] = web.web_dim;
    out["phi_dims"] = web.chain.dims();
    out["phi_stabilized_at"] = web.chain.stabilized_at;
    out["filtration_dims"] = web.filtration.dims();
    Json curves = Json::array();
    for (const auto& c : web.curves) {
        Json e;
        e["level"] = c.level;
        e["degree"] = c.degree;
        e["quotient_dim"] = c.quotient_dim;
        e["coefficients"] = mat_json(c.coords);
        e["veronese"] = veronese_check(c);
        curves.push_back(e);
    }
    out["curves"] = curves;
    Json v;
    v["phi_dimensions"] = web.verdict.phi_dimensions;
    v["filtration_ranks"] = web.verdict.filtration_ranks;
    v["induced_ranks"] = web.verdict.induced_ranks;
    v["veronese"] = web.verdict.veronese;
    v["curve_points"] = web.verdict.curve_points;
    out["verdicts"] = v;
    out["pass"] = web.verdict.ok();
    return out;
}

Json translation_json(const TranslationReport& rep)
{
    Json out;
    out["exponents"] = rep.exponents;
    out["minimal_indices"] = rep.analysis.minimal_indices;
    out["complete"] = rep.analysis.complete;
    out["type_matches"] = rep.type_matches;
    out["exponent_sum"] = rep.exponent_sum;
    out["differentials"] = rep.differentials;
    out["expected_differentials"] = rep.expected_differentials;
    out["coframe"] = rep.coframe;
    out["involutive"] = rep.involutive;
    out["generators_in_kernel"] = rep.generators_in_kernel;
    out["casimirs_certified"] = rep.casimirs_certified;
    out["casimir_certification"] = rep.casimirs_sampled_only ? "sampled-only" : "exact";
    out["half_rank"] = 2 * rep.analysis.bilagrangian.dim() == rep.analysis.generic_rank;
    out["pass"] = rep.ok();
    return out;
}

namespace {

bool is_flat_array(const Json& j)
{
    if (!j.is_array()) return false;
    for (const auto& e : j) {
        if (e.is_structured()) return false;
    }
    return true;
}

bool is_matrix(const Json& j)
{
    if (!j.is_array() || j.empty()) return false;
    for (const auto& e : j) {
        if (!is_flat_array(e)) return false;
    }
    return true;
}

std::string scalar_text(const Json& j)
{
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

std::string flat_text(const Json& j)
{
    std::string s = "[";
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) s += ", ";
        s += scalar_text(j[i]);
    }
    return s + "]";
}

void render(std::ostringstream& os, const Json& j, const std::string& pad)
{
    for (const auto& [key, value] : j.items()) {
        if (value.is_object()) {
            os << pad << key << ":\n";
            render(os, value, pad + "  ");
        } else if (is_matrix(value)) {
            os << pad << key << ":\n";
            for (const auto& row : value) os << pad << "  " << flat_text(row) << "\n";
        } else if (is_flat_array(value)) {
            os << pad << key << ": " << flat_text(value) << "\n";
        } else if (value.is_array()) {
            os << pad << key << ":\n";
            for (const auto& e : value) {
                if (e.is_object()) {
                    os << pad << "  -\n";
                    render(os, e, pad + "    ");
                } else {
                    os << pad << "  - " << (e.is_array() ? flat_text(e) : scalar_text(e)) << "\n";
                }
            }
        } else {
            os << pad << key << ": " << scalar_text(value) << "\n";
        }
    }
}

} // namespace

std::string render_text(const Json& report)
{
    std::ostringstream os;
    if (report.contains("examples")) {
        for (const auto& ex : report.at("examples")) {
            os << (ex.at("pass").get<bool>() ? "PASS " : "FAIL ") << ex.at("id").get<std::string>() << ": "
               << ex.at("title").get<std::string>() << "\n";
            for (const auto& c : ex.at("checks")) {
                os << "  " << (c.at("pass").get<bool>() ? "ok   " : "FAIL ") << c.at("name").get<std::string>();
                const std::string detail = c.at("detail").get<std::string>();
                if (!detail.empty()) os << " (" << detail << ")";
                os << "\n";
            }
        }
        os << (report.at("pass").get<bool>() ? "all examples passed" : "some examples failed") << "\n";
        return os.str();
    }
    render(os, report, "");
    return os.str();
}

} // namespace veronese
