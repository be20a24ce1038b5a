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

#include <veronese/error.hpp>
#include <veronese/io.hpp>
#include <veronese/webfilt.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace veronese {

inline constexpr std::uint64_t default_seed = 20260101;

enum class OutputFormat { Text, Json };

struct RunConfig {
    std::string command;
    std::vector<std::string> inputs;
    std::optional<Vec> point;
    std::optional<Vec> shift;
    std::string algebra;
    std::string casimirs;
    std::string only;
    OutputFormat format = OutputFormat::Text;
    std::uint64_t seed = default_seed;
};

/// Exit codes: 0 success, 1 a verification failed, 2 invalid input.
enum ExitCode : int { exit_ok = 0, exit_verification = 1, exit_input = 2 };

int exit_code_for(ErrorCode code);

Json analysis_json(const PencilAnalysis& an);
Json basis_json(const KroneckerBasis& kb);
Json pair_verdict_json(const PairVerdict& v);
Json web_json(const InfinitesimalWeb& web);
Json translation_json(const TranslationReport& rep);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ExampleResult {
    std::string id;
    std::string alias;
    std::string title;
    std::vector<CheckResult> checks;

    bool pass() const;
};

/// Identifiers of the built-in examples, in run order.
std::vector<std::string> example_ids();

/// Runs every built-in example, or only the one named (by id or alias).
/// Throws InvalidArgument for an unknown name.
std::vector<ExampleResult> run_examples(const std::string& only, std::uint64_t seed);
Json examples_json(const std::vector<ExampleResult>& results);

/// Report object and exit code of one command.
struct CommandResult {
    Json report;
    int exit_code = exit_ok;
};

CommandResult run_command(const RunConfig& cfg);

/// Text rendering of a report.
std::string render_text(const Json& report);

/// Full command line handling; argv excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace veronese
