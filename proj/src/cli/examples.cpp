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

#include <algorithm>
#include <functional>
#include <sstream>

namespace veronese {

bool ExampleResult::pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

namespace {

using Dims = std::vector<std::size_t>;

std::string dims_text(const Dims& d)
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
    os << ")";
    return os.str();
}

bool half_rank(const PencilAnalysis& an)
{
    return an.complete && 2 * an.bilagrangian.dim() == an.generic_rank;
}

// Runs fn, turning a thrown Error into a failed check.
CheckResult guarded(const std::string& name, const std::function<CheckResult()>& fn)
{
    try {
        CheckResult r = fn();
        r.name = name;
        return r;
    } catch (const Error& e) {
        return {name, false, std::string(error_code_name(e.code())) + ": " + e.what()};
    }
}

// Types (and web verdicts) at `count` points drawn from the sequence.
CheckResult types_at_points(const BivectorPair& pair, RationalSequence& seq, std::size_t count, const Dims& expected,
                            const std::function<void(Vec&)>& adjust)
{
    const std::size_t n = pair.c1.n_vars();
    for (std::size_t t = 0; t < count; ++t) {
        Vec x = seq.vector(n);
        if (adjust) adjust(x);
        const PencilAnalysis an = analyze(pencil_at(pair, x));
        if (an.minimal_indices != expected || !half_rank(an)) {
            return {"", false, "type " + dims_text(an.minimal_indices) + " at point " + std::to_string(t + 1)};
        }
    }
    return {"", true, std::to_string(count) + " points, type " + dims_text(expected) + ", complete, dim L = rank/2"};
}

CheckResult webs_at_points(const BivectorPair& pair, RationalSequence& seq, std::size_t count)
{
    const std::size_t n = pair.c1.n_vars();
    for (std::size_t t = 0; t < count; ++t) {
        const InfinitesimalWeb web = build_infinitesimal_web(pencil_at(pair, seq.vector(n)));
        if (!web.verdict.ok()) return {"", false, "web verdict fails at point " + std::to_string(t + 1)};
    }
    return {"", true, std::to_string(count) + " points"};
}

CheckResult pair_check_result(const BivectorPair& pair)
{
    const PairVerdict v = pair_report(pair.c1, pair.c2);
    std::ostringstream os;
    os << "[c1,c1] " << (v.first_poisson ? "= 0" : "!= 0") << ", [c2,c2] " << (v.second_poisson ? "= 0" : "!= 0")
       << ", [c1,c2] " << (v.compatible ? "= 0" : "!= 0");
    return {"", v.ok(), os.str()};
}

ExampleResult two_block_illustration()
{
    ExampleResult ex{"two-block-illustration", "", "pencil p^q1, p^q2 on span{e,p,q1,q2}", {}};
    const SkewPencil p = two_block_pencil();
    const PencilAnalysis an = analyze(p);
    ex.checks.push_back({"generic rank 2", an.generic_rank == 2, "got " + std::to_string(an.generic_rank)});
    ex.checks.push_back({"minimal indices [0,1]", an.minimal_indices == Dims{0, 1}, "got " + dims_text(an.minimal_indices)});
    ex.checks.push_back({"complete", an.complete, ""});
    ex.checks.push_back({"L = span{p}", an.bilagrangian == Subspace::span(Mat{{0, 1, 0, 0}}), ""});
    ex.checks.push_back({"dim L = rank/2", half_rank(an), ""});
    const PhiChain chain = phi_chain(p);
    ex.checks.push_back({"Phi dims (4,3,1)", chain.dims() == Dims{4, 3, 1}, "got " + dims_text(chain.dims())});
    ex.checks.push_back(guarded("Phi dimension formula", [&] {
        return CheckResult{"", verify_phi_chain(chain, an.minimal_indices), ""};
    }));
    return ex;
}

ExampleResult nonregular(std::uint64_t seed)
{
    ExampleResult ex{"nonregular", "4.8", "pair with a non-regular locus q1 = 0", {}};
    const BivectorPair pair = nonregular_pair();
    RationalSequence seq(seed);
    ex.checks.push_back(guarded("pair is bihamiltonian", [&] { return pair_check_result(pair); }));
    ex.checks.push_back(guarded("type [1,1] where q1 != 0", [&] {
        return types_at_points(pair, seq, 10, Dims{1, 1}, [](Vec& x) {
            if (x[2] == 0) x[2] = 1;
        });
    }));
    ex.checks.push_back(guarded("type [0,2] where q1 = 0", [&] {
        return types_at_points(pair, seq, 10, Dims{0, 2}, [](Vec& x) { x[2] = 0; });
    }));
    return ex;
}

ExampleResult codim1_web(std::uint64_t seed)
{
    ExampleResult ex{"codim1-web", "4.4", "codimension-one web with non-integrable F1", {}};
    const BivectorPair pair = codim1_web_pair();
    RationalSequence seq(seed);
    ex.checks.push_back(guarded("pair is bihamiltonian", [&] { return pair_check_result(pair); }));
    ex.checks.push_back(guarded("type (0,1) at generic points",
                                [&] { return types_at_points(pair, seq, 5, Dims{0, 1}, nullptr); }));
    ex.checks.push_back(guarded("web verdicts at generic points", [&] { return webs_at_points(pair, seq, 5); }));
    ex.checks.push_back(guarded("x dy - dz is not integrable", [&] {
        const PolyForm a1 = codim1_alpha1();
        const bool nonzero = !wedge(exterior_d(a1), a1).is_zero();
        return CheckResult{"", nonzero && !frobenius_check({a1}), "d(alpha)^alpha != 0"};
    }));
    return ex;
}

ExampleResult codim2_web(std::uint64_t seed)
{
    ExampleResult ex{"codim2-web", "4.5", "codimension-two web of type (1,2)", {}};
    const BivectorPair pair = codim2_web_pair();
    RationalSequence seq(seed);
    ex.checks.push_back(guarded("pair is bihamiltonian", [&] { return pair_check_result(pair); }));
    ex.checks.push_back(guarded("type (1,2) at generic points",
                                [&] { return types_at_points(pair, seq, 5, Dims{1, 2}, nullptr); }));
    ex.checks.push_back(guarded("web verdicts at generic points", [&] { return webs_at_points(pair, seq, 5); }));
    ex.checks.push_back(guarded("d alpha1 = alpha2 ^ (1/l1) dy", [&] {
        for (auto [l1, l2] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}}) {
            const Lambda lam(l1, l2);
            const PolyForm a1 = codim2_alpha1(lam);
            const PolyForm dy = coordinate_form(a1.vars(), 1);
            if (exterior_d(a1) != wedge(codim2_alpha2(lam), Scalar(1, l1) * dy)) {
                return CheckResult{"", false, "fails at (" + std::to_string(l1) + "," + std::to_string(l2) + ")"};
            }
        }
        return CheckResult{"", true, "at (1,1), (1,2), (2,1)"};
    }));
    ex.checks.push_back(guarded("d alpha1 = -alpha2 ^ (1/l2) ds at l1 = 0", [&] {
        const Lambda lam(0, 1);
        const PolyForm a1 = codim2_alpha1(lam);
        const PolyForm ds = coordinate_form(a1.vars(), 3);
        return CheckResult{"", exterior_d(a1) == Scalar(-1) * wedge(codim2_alpha2(lam), ds), "at (0,1)"};
    }));
    ex.checks.push_back(guarded("F1 generators are not integrable", [&] {
        return CheckResult{"", !frobenius_check(codim2_f1_generators()), ""};
    }));
    return ex;
}

ExampleResult argument_translation(std::uint64_t seed)
{
    ExampleResult ex{"argument-translation", "", "argument translation on sl(2), sl(3), sl(4)", {}};
    for (std::size_t n = 2; n <= 4; ++n) {
        ex.checks.push_back(guarded("sl(" + std::to_string(n) + ") type equals exponents", [&] {
            const StructureConstants sc = sl_structure(n);
            const Witness w = find_generic_witness(sc, seed + n);
            const TranslationReport rep = verify_translation(sc, casimirs_sl(n), w.a, w.x, seed + n);
            return CheckResult{"", rep.ok() && half_rank(rep.analysis), "type " + dims_text(rep.analysis.minimal_indices)};
        }));
    }
    return ex;
}

struct Entry {
    std::string id;
    std::string alias;
    std::function<ExampleResult(std::uint64_t)> run;
};

const std::vector<Entry>& registry()
{
    static const std::vector<Entry> entries{
        {"two-block-illustration", "", [](std::uint64_t) { return two_block_illustration(); }},
        {"nonregular", "4.8", nonregular},
        {"codim1-web", "4.4", codim1_web},
        {"codim2-web", "4.5", codim2_web},
        {"argument-translation", "", argument_translation},
    };
    return entries;
}

} // namespace

std::vector<std::string> example_ids()
{
    std::vector<std::string> out;
    for (const auto& e : registry()) out.push_back(e.id);
    return out;
}

std::vector<ExampleResult> run_examples(const std::string& only, std::uint64_t seed)
{
    std::vector<ExampleResult> out;
    for (const auto& e : registry()) {
        if (only.empty() || only == e.id || (!e.alias.empty() && only == e.alias)) out.push_back(e.run(seed));
    }
    if (out.empty()) throw Error(ErrorCode::InvalidArgument, "unknown example \"" + only + "\"");
    return out;
}

Json examples_json(const std::vector<ExampleResult>& results)
{
    Json list = Json::array();
    bool all = true;
    for (const auto& ex : results) {
        Json e;
        e["id"] = ex.id;
        if (!ex.alias.empty()) e["alias"] = ex.alias;
        e["title"] = ex.title;
        e["pass"] = ex.pass();
        Json checks = Json::array();
        for (const auto& c : ex.checks) {
            Json cj;
            cj["name"] = c.name;
            cj["pass"] = c.pass;
            cj["detail"] = c.detail;
            checks.push_back(cj);
        }
        e["checks"] = checks;
        list.push_back(e);
        all = all && ex.pass();
    }
    Json out;
    out["command"] = "examples verify";
    out["examples"] = list;
    out["pass"] = all;
    return out;
}

} // namespace veronese
