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
#include <veronese/io.hpp>

#include <fstream>
#include <sstream>

namespace veronese {

namespace {

[[noreturn]] void bad(const std::string& what)
{
    throw Error(ErrorCode::ParseError, what);
}

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::size_t count_from_json(const Json& j, const char* what)
{
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
        bad(std::string(what) + " must be a non-negative integer");
    }
    return j.get<std::size_t>();
}

VarNames vars_from_json(const Json& j, std::size_t n)
{
    if (!j.is_array()) bad("\"vars\" must be an array of names");
    std::vector<std::string> names;
    for (const auto& v : j) {
        if (!v.is_string()) bad("variable names must be strings");
        names.push_back(v.get<std::string>());
    }
    if (names.size() != n) bad("\"vars\" has " + std::to_string(names.size()) + " names, expected " + std::to_string(n));
    return make_vars(std::move(names));
}

Json vars_json(const VarNames& v)
{
    Json out = Json::array();
    for (const auto& name : *v) out.push_back(name);
    return out;
}

template <Variance V>
Json tensor_json(const AntisymTensor<V>& t)
{
    Json out;
    out["n_vars"] = t.n_vars();
    out["degree"] = t.degree();
    out["vars"] = vars_json(t.vars());
    Json comps = Json::array();
    for (const auto& [idx, poly] : t.components()) {
        Json c;
        Json ij = Json::array();
        for (auto i : idx) ij.push_back(i + 1);
        c["idx"] = ij;
        c["poly"] = poly.to_string();
        comps.push_back(c);
    }
    out["components"] = comps;
    return out;
}

template <Variance V>
AntisymTensor<V> tensor_from_json(const Json& j, const VarNames& shared)
{
    const std::size_t n = count_from_json(field(j, "n_vars"), "\"n_vars\"");
    const std::size_t d = count_from_json(field(j, "degree"), "\"degree\"");
    VarNames vars = shared;
    if (vars) {
        if (vars->size() != n) bad("\"n_vars\" disagrees with the shared variable list");
    } else if (j.contains("vars")) {
        vars = vars_from_json(j.at("vars"), n);
    } else {
        vars = indexed_vars(n);
    }
    AntisymTensor<V> out(vars, d);
    const Json& comps = field(j, "components");
    if (!comps.is_array()) bad("\"components\" must be an array");
    for (const auto& c : comps) {
        const Json& idx = field(c, "idx");
        if (!idx.is_array() || idx.size() != d) bad("component index must list " + std::to_string(d) + " entries");
        std::vector<std::size_t> index;
        for (const auto& i : idx) {
            const std::size_t k = count_from_json(i, "component index");
            if (k < 1 || k > n) bad("component index " + std::to_string(k) + " outside 1.." + std::to_string(n));
            index.push_back(k - 1);
        }
        const Json& poly = field(c, "poly");
        if (!poly.is_string() && !poly.is_number_integer()) bad("\"poly\" must be a string");
        const std::string text = poly.is_string() ? poly.get<std::string>() : std::to_string(poly.get<long long>());
        out.add(index, parse_poly(text, vars));
    }
    return out;
}

} // namespace

Json parse_json_text(const std::string& text, const std::string& origin)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // locate the byte offset as line:column
        const std::size_t pos = std::min<std::size_t>(e.byte, text.size());
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < pos; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        bad(origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": invalid JSON");
    }
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str(), path);
}

Json scalar_json(const Scalar& q) { return to_string(q); }

Scalar scalar_from_json(const Json& j)
{
    if (j.is_string()) return parse_scalar(j.get<std::string>());
    if (j.is_number_integer()) return Scalar(j.get<long>());
    bad("rational entries must be strings like \"-3/4\" or integers");
}

Json vec_json(const Vec& v)
{
    Json out = Json::array();
    for (const auto& q : v) out.push_back(scalar_json(q));
    return out;
}

Vec vec_from_json(const Json& j)
{
    if (!j.is_array()) bad("expected an array of rationals");
    Vec out;
    for (const auto& e : j) out.push_back(scalar_from_json(e));
    return out;
}

Json mat_json(const Mat& m)
{
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vec_json(m.row_vec(i)));
    return out;
}

Mat mat_from_json(const Json& j)
{
    if (!j.is_array()) bad("expected a row-major array of rows");
    std::vector<Vec> rows;
    for (const auto& r : j) rows.push_back(vec_from_json(r));
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (const auto& r : rows) {
        if (r.size() != cols) bad("matrix rows have different lengths");
    }
    return Mat::from_rows(rows, cols);
}

Json pencil_json(const SkewPencil& p)
{
    Json out;
    out["dim"] = p.dim();
    out["A"] = mat_json(p.a());
    out["B"] = mat_json(p.b());
    return out;
}

SkewPencil pencil_from_json(const Json& j)
{
    const std::size_t n = count_from_json(field(j, "dim"), "\"dim\"");
    Mat a = mat_from_json(field(j, "A"));
    Mat b = mat_from_json(field(j, "B"));
    if (a.rows() != n || a.cols() != n || b.rows() != n || b.cols() != n) {
        throw Error(ErrorCode::DimensionMismatch, "\"A\" and \"B\" must be " + std::to_string(n) + "x" + std::to_string(n));
    }
    return SkewPencil(std::move(a), std::move(b));
}

Json multivec_json(const PolyMultiVec& t) { return tensor_json(t); }
PolyMultiVec multivec_from_json(const Json& j, const VarNames& shared)
{
    return tensor_from_json<Variance::Contravariant>(j, shared);
}
Json form_json(const PolyForm& t) { return tensor_json(t); }
PolyForm form_from_json(const Json& j, const VarNames& shared) { return tensor_from_json<Variance::Covariant>(j, shared); }

bool is_pair_document(const Json& j) { return j.is_object() && j.contains("c1") && j.contains("c2"); }

Json pair_json(const BivectorPair& p)
{
    Json out;
    out["vars"] = vars_json(p.c1.vars());
    out["c1"] = multivec_json(p.c1);
    out["c2"] = multivec_json(p.c2);
    return out;
}

BivectorPair pair_from_json(const Json& j)
{
    VarNames shared;
    if (j.contains("vars")) shared = vars_from_json(j.at("vars"), j.at("vars").is_array() ? j.at("vars").size() : 0);
    BivectorPair out;
    out.c1 = multivec_from_json(field(j, "c1"), shared);
    out.c2 = multivec_from_json(field(j, "c2"), shared ? shared : out.c1.vars());
    if (out.c1.degree() != 2 || out.c2.degree() != 2) bad("both members of a pair must be bivectors");
    return out;
}

Json structure_json(const StructureConstants& sc)
{
    Json out;
    out["dim"] = sc.dim();
    Json br = Json::array();
    for (const auto& [key, c] : sc.entries()) br.push_back(Json::array({key[0] + 1, key[1] + 1, key[2] + 1, to_string(c)}));
    out["brackets"] = br;
    if (!sc.labels().empty()) out["labels"] = sc.labels();
    return out;
}

StructureConstants structure_from_json(const Json& j)
{
    const std::size_t n = count_from_json(field(j, "dim"), "\"dim\"");
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        const VarNames v = vars_from_json(j.at("labels"), n);
        labels = *v;
    }
    StructureConstants sc(n, labels);
    const Json& br = field(j, "brackets");
    if (!br.is_array()) bad("\"brackets\" must be an array");
    for (const auto& e : br) {
        if (!e.is_array() || e.size() != 4) bad("each bracket entry is [i, j, k, \"c\"]");
        const std::size_t i = count_from_json(e[0], "bracket index");
        const std::size_t k1 = count_from_json(e[1], "bracket index");
        const std::size_t k = count_from_json(e[2], "bracket index");
        if (i < 1 || k1 < 1 || k < 1 || i > n || k1 > n || k > n) bad("bracket index outside 1.." + std::to_string(n));
        if (i >= k1) bad("bracket entries need i < j");
        sc.set(i - 1, k1 - 1, k - 1, scalar_from_json(e[3]));
    }
    return sc;
}

std::vector<MultiPoly> casimirs_from_json(const Json& j, const VarNames& vars)
{
    if (!j.is_array()) bad("Casimir document must be an array of polynomial strings");
    std::vector<MultiPoly> out;
    for (const auto& e : j) {
        if (!e.is_string()) bad("Casimir entries must be strings");
        out.push_back(parse_poly(e.get<std::string>(), vars));
    }
    return out;
}

} // namespace veronese
