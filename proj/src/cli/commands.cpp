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

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>

namespace veronese {

namespace {

const std::string& single_input(const RunConfig& cfg)
{
    if (cfg.inputs.size() != 1) throw Error(ErrorCode::InvalidArgument, cfg.command + " takes exactly one --input");
    return cfg.inputs.front();
}

// A pencil document, or a pair document evaluated at --point.
SkewPencil load_pencil(const RunConfig& cfg, Json& echo)
{
    const std::string& path = single_input(cfg);
    const Json doc = read_json_file(path);
    echo["input"] = path;
    if (!is_pair_document(doc)) return pencil_from_json(doc);
    if (!cfg.point) throw Error(ErrorCode::InvalidArgument, "a bivector pair input needs --point");
    const BivectorPair pair = pair_from_json(doc);
    if (cfg.point->size() != pair.c1.n_vars()) {
        throw Error(ErrorCode::DimensionMismatch, "--point has " + std::to_string(cfg.point->size()) +
                                                      " coordinates, the pair has " +
                                                      std::to_string(pair.c1.n_vars()) + " variables");
    }
    echo["point"] = vec_json(*cfg.point);
    return pencil_at(pair, *cfg.point);
}

Json header(const RunConfig& cfg)
{
    Json out;
    out["command"] = cfg.command;
    return out;
}

CommandResult pencil_analyze(const RunConfig& cfg)
{
    Json out = header(cfg);
    const SkewPencil p = load_pencil(cfg, out);
    out["analysis"] = analysis_json(analyze(p));
    return {out, exit_ok};
}

CommandResult pencil_basis(const RunConfig& cfg)
{
    Json out = header(cfg);
    const SkewPencil p = load_pencil(cfg, out);
    const KroneckerBasis kb = kronecker_basis(p);
    std::vector<std::size_t> indices;
    for (auto size : kb.block_layout) indices.push_back((size - 1) / 2);
    const bool verified = congruence(p, kb.s) == canonical_pencil(indices);
    out["basis"] = basis_json(kb);
    out["basis"]["congruence_verified"] = verified;
    return {out, verified ? exit_ok : exit_verification};
}

CommandResult poisson_check(const RunConfig& cfg)
{
    Json out = header(cfg);
    BivectorPair pair;
    if (cfg.inputs.size() == 1) {
        out["input"] = cfg.inputs[0];
        pair = pair_from_json(read_json_file(cfg.inputs[0]));
    } else if (cfg.inputs.size() == 2) {
        out["input"] = cfg.inputs;
        const Json first = read_json_file(cfg.inputs[0]);
        const Json second = read_json_file(cfg.inputs[1]);
        pair.c1 = multivec_from_json(first);
        const PolyMultiVec probe = multivec_from_json(second);
        if (probe.n_vars() != pair.c1.n_vars()) {
            throw Error(ErrorCode::DimensionMismatch, "bivectors have " + std::to_string(pair.c1.n_vars()) + " and " +
                                                          std::to_string(probe.n_vars()) + " variables");
        }
        pair.c2 = multivec_from_json(second, pair.c1.vars());
    } else {
        throw Error(ErrorCode::InvalidArgument, "poisson check takes a pair document or two bivector documents");
    }
    if (pair.c1.degree() != 2 || pair.c2.degree() != 2) {
        throw Error(ErrorCode::InvalidArgument, "poisson check expects bivectors");
    }
    const Json verdict = pair_verdict_json(pair_report(pair.c1, pair.c2));
    for (const auto& [k, v] : verdict.items()) out[k] = v;
    return {out, out["pass"].get<bool>() ? exit_ok : exit_verification};
}

CommandResult web_build(const RunConfig& cfg)
{
    Json out = header(cfg);
    const SkewPencil p = load_pencil(cfg, out);
    const Json web = web_json(build_infinitesimal_web(p));
    for (const auto& [k, v] : web.items()) out[k] = v;
    return {out, out["pass"].get<bool>() ? exit_ok : exit_verification};
}

std::size_t sl_rank_of(const std::string& name)
{
    if (name.size() < 3 || name.compare(0, 2, "sl") != 0) return 0;
    std::size_t n = 0;
    for (std::size_t i = 2; i < name.size(); ++i) {
        if (name[i] < '0' || name[i] > '9' || n > 100) return 0;
        n = 10 * n + static_cast<std::size_t>(name[i] - '0');
    }
    return n;
}

CommandResult lie_translate(const RunConfig& cfg)
{
    Json out = header(cfg);
    StructureConstants sc;
    std::optional<CasimirSet> cs;
    if (!cfg.algebra.empty()) {
        if (!cfg.inputs.empty()) throw Error(ErrorCode::InvalidArgument, "give either --algebra or --input");
        const std::size_t n = sl_rank_of(cfg.algebra);
        if (n < 2) throw Error(ErrorCode::InvalidArgument, "unknown algebra \"" + cfg.algebra + "\" (expected slN, N >= 2)");
        sc = sl_structure(n);
        cs = casimirs_sl(n);
        out["algebra"] = cfg.algebra;
    } else {
        const std::string& path = single_input(cfg);
        sc = structure_from_json(read_json_file(path));
        out["input"] = path;
    }
    require_lie_algebra(sc);
    if (!cfg.casimirs.empty()) {
        cs = casimir_set(casimirs_from_json(read_json_file(cfg.casimirs), sc.vars()));
        out["casimirs"] = cfg.casimirs;
    }
    if (!cs) throw Error(ErrorCode::InvalidArgument, "a structure-constant input needs --casimirs");
    out["dim"] = sc.dim();
    out["seed"] = cfg.seed;

    Vec a, x;
    if (cfg.shift && cfg.point) {
        a = *cfg.shift;
        x = *cfg.point;
    } else {
        const Witness w = find_generic_witness(sc, cfg.seed);
        a = cfg.shift ? *cfg.shift : w.a;
        x = cfg.point ? *cfg.point : w.x;
        out["witness_attempts"] = w.attempts;
    }
    if (a.size() != sc.dim() || x.size() != sc.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "--shift and --point need " + std::to_string(sc.dim()) + " coordinates");
    }
    out["shift"] = vec_json(a);
    out["point"] = vec_json(x);
    translation_pair(sc, a);

    const TranslationReport rep = verify_translation(sc, *cs, a, x, cfg.seed);
    const Json body = translation_json(rep);
    for (const auto& [k, v] : body.items()) out[k] = v;
    Json warnings = Json::array();
    if (rep.casimirs_sampled_only) warnings.push_back("sampled-only Casimir certification");
    out["warnings"] = warnings;
    return {out, rep.ok() ? exit_ok : exit_verification};
}

CommandResult examples_verify(const RunConfig& cfg)
{
    const std::vector<ExampleResult> results = run_examples(cfg.only, cfg.seed);
    Json out = examples_json(results);
    out["seed"] = cfg.seed;
    return {out, out["pass"].get<bool>() ? exit_ok : exit_verification};
}

Json error_json(const Error& e)
{
    Json body;
    body["code"] = std::string(error_code_name(e.code()));
    body["message"] = e.what();
    Json out;
    out["error"] = body;
    return out;
}

void emit_error(const Error& e, OutputFormat format, std::ostream& err)
{
    if (format == OutputFormat::Json) {
        err << error_json(e).dump(2) << "\n";
    } else {
        err << "error [" << error_code_name(e.code()) << "]: " << e.what() << "\n";
    }
}

} // namespace

CommandResult run_command(const RunConfig& cfg)
{
    if (cfg.command == "pencil analyze") return pencil_analyze(cfg);
    if (cfg.command == "pencil basis") return pencil_basis(cfg);
    if (cfg.command == "poisson check") return poisson_check(cfg);
    if (cfg.command == "web build") return web_build(cfg);
    if (cfg.command == "lie translate") return lie_translate(cfg);
    if (cfg.command == "examples verify") return examples_verify(cfg);
    throw Error(ErrorCode::InvalidArgument, "unknown command \"" + cfg.command + "\"");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact analysis of skew pencils, Poisson pairs and Veronese webs", "veronese"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string point, shift, format = "text";
    std::uint64_t seed = default_seed;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--seed", seed, "Seed for sampled points")->capture_default_str();
    };
    auto with_input = [&](CLI::App* sub, bool many) {
        auto* opt = sub->add_option("--input", cfg.inputs, "Input JSON document");
        if (many) opt->expected(1, 2);
        else opt->expected(1);
    };

    CLI::App* pencil = app.add_subcommand("pencil", "Skew pencils")->require_subcommand(1);
    CLI::App* analyze_cmd = pencil->add_subcommand("analyze", "Kronecker indices, completeness and L");
    CLI::App* basis_cmd = pencil->add_subcommand("basis", "Kronecker basis of a complete pencil");
    CLI::App* poisson = app.add_subcommand("poisson", "Poisson pairs")->require_subcommand(1);
    CLI::App* check_cmd = poisson->add_subcommand("check", "Jacobi and compatibility of two bivectors");
    CLI::App* web = app.add_subcommand("web", "Infinitesimal Veronese webs")->require_subcommand(1);
    CLI::App* build_cmd = web->add_subcommand("build", "Phi-chain, filtration and Veronese curves");
    CLI::App* lie = app.add_subcommand("lie", "Lie algebras")->require_subcommand(1);
    CLI::App* translate_cmd = lie->add_subcommand("translate", "Argument translation pair at a point");
    CLI::App* examples = app.add_subcommand("examples", "Built-in examples")->require_subcommand(1);
    CLI::App* verify_cmd = examples->add_subcommand("verify", "Run the built-in examples");

    for (CLI::App* sub : {analyze_cmd, basis_cmd, build_cmd}) {
        with_input(sub, false);
        sub->add_option("--point", point, "Evaluation point for a bivector pair, comma-separated rationals");
        common(sub);
    }
    with_input(check_cmd, true);
    common(check_cmd);
    with_input(translate_cmd, false);
    translate_cmd->add_option("--algebra", cfg.algebra, "Built-in algebra slN");
    translate_cmd->add_option("--casimirs", cfg.casimirs, "JSON list of invariant polynomials");
    translate_cmd->add_option("--shift", shift, "Shift a, comma-separated rationals");
    translate_cmd->add_option("--point", point, "Point x, comma-separated rationals");
    common(translate_cmd);
    verify_cmd->add_option("--only", cfg.only, "Run a single example by id or alias");
    common(verify_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        const bool json = std::find(args.begin(), args.end(), "json") != args.end();
        emit_error(Error(ErrorCode::InvalidArgument, e.what()), json ? OutputFormat::Json : OutputFormat::Text, err);
        return exit_input;
    }

    cfg.format = format == "json" ? OutputFormat::Json : OutputFormat::Text;
    cfg.seed = seed;
    const std::vector<std::pair<CLI::App*, const char*>> leaves{
        {analyze_cmd, "pencil analyze"}, {basis_cmd, "pencil basis"},      {check_cmd, "poisson check"},
        {build_cmd, "web build"},        {translate_cmd, "lie translate"}, {verify_cmd, "examples verify"}};
    for (const auto& [sub, name] : leaves) {
        if (sub->parsed()) cfg.command = name;
    }

    try {
        if (!point.empty()) cfg.point = parse_scalar_list(point);
        if (!shift.empty()) cfg.shift = parse_scalar_list(shift);
        const CommandResult res = run_command(cfg);
        if (cfg.format == OutputFormat::Json) {
            out << res.report.dump(2) << "\n";
        } else {
            out << render_text(res.report);
        }
        return res.exit_code;
    } catch (const Error& e) {
        emit_error(e, cfg.format, err);
        return exit_code_for(e.code());
    }
}

} // namespace veronese
