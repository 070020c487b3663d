// Copyright 2026 The anymask Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// anymask command-line driver.
//
//   anymask verify   --model abelian|ising[:c] [--scheme paper-d4|cyclic-d3|FILE] [--input "a,b,.."]
//   anymask braid    --ops "xBC;cBA;t3" ...
//   anymask mols     --dim d
//   anymask teleport --input "a,b,c"
//   anymask model    [--file FILE]
//
// Exit status: 0 every gated check passed, 1 a check failed, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "anymask_cli/campaign.hpp"

namespace {

using namespace anymask::cli;

struct Options {
    CampaignConfig config;
    bool seed_given = false;
    std::string input;
    std::string ops;
    std::size_t dim = 3;
    std::string model_file;
};

void add_common(CLI::App& cmd, Options& o, bool campaign) {
    cmd.add_option("--model", o.config.model, "abelian, ising or ising:<odd c>")
        ->capture_default_str();
    if (campaign) {
        cmd.add_option("--scheme", o.config.scheme, "paper-d4, cyclic-d3 or a scheme file");
        cmd.add_option_function<std::uint64_t>(
            "--seed",
            [&o](std::uint64_t s) {
                o.config.seed = s;
                o.seed_given = true;
            },
            "campaign seed (default: $ANYMASK_SEED or 1)");
        cmd.add_option("--threads", o.config.threads, "worker threads")->capture_default_str();
    }
    cmd.add_option("--tol", o.config.tol, "pass tolerance")->capture_default_str();
    cmd.add_option("--out", o.config.out, "also write the structured report to this path");
    cmd.add_option("--format", o.config.format, "stdout format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Format>{{"text", Format::text}, {"structured", Format::structured}}))
        ->default_str("text");
}

int emit(const CommandResult& r, const CampaignConfig& config) {
    for (const auto& w : r.warnings) std::cerr << "warning: " << w << '\n';
    std::cout << r.render(config.format);
    if (!config.out.empty()) {
        std::ofstream out(config.out, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write '" << config.out << "'\n";
            return kExitUsage;
        }
        out << r.structured;
    }
    return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact simulator and verifier for quantum information masking with Kitaev anyons"};
    app.set_version_flag("--version", std::string(version()));
    app.require_subcommand(1);

    Options o;
    auto* verify = app.add_subcommand("verify", "encode seeded random inputs and check every marginal is I/d");
    add_common(*verify, o, true);
    verify->add_option("--trials", o.config.trials, "number of seeded inputs")->capture_default_str();
    verify->add_option("--input", o.input, "verify a single input, e.g. \"1,0,0\" or \"0.6,0.8i,0\"");

    auto* braid = app.add_subcommand("braid", "check masking survives a braid sequence");
    add_common(*braid, o, true);
    braid->add_option("--trials", o.config.trials, "number of seeded inputs")->default_str("100");
    braid->add_option("--ops", o.ops, "ops separated by ';': xAB, xBC, xAB@vac, xBC@eps, cXY, t3")
        ->required();

    auto* mols = app.add_subcommand("mols", "search for a pair of orthogonal Latin squares");
    mols->add_option("--dim", o.dim, "order d, at most 5")->required();
    mols->add_option("--out", o.config.out, "also write the structured report to this path");
    mols->add_option("--format", o.config.format, "stdout format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Format>{{"text", Format::text}, {"structured", Format::structured}}))
        ->default_str("text");

    auto* teleport = app.add_subcommand("teleport", "teleport a qutrit through the anyonic channel");
    add_common(*teleport, o, false);
    teleport->add_option("--input", o.input, "three complex coefficients, e.g. \"0.6,0.8i,0\"")
        ->required();

    auto* model = app.add_subcommand("model", "print and validate a model's tables");
    add_common(*model, o, false);
    model->add_option("--file", o.model_file, "validate a serialized model file instead");

    // braid has its own default trial count.
    braid->preparse_callback([&o](std::size_t) { o.config.trials = 100; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (!o.seed_given) {
            if (auto env = seed_from_env()) o.config.seed = *env;
        }
        if (*verify) {
            std::optional<std::vector<anymask::Amplitude>> input;
            if (!o.input.empty()) input = parse_complex_list(o.input);
            return emit(run_verify(o.config, input), o.config);
        }
        if (*braid) return emit(run_braid(o.config, o.ops), o.config);
        if (*mols) return emit(run_mols(o.dim), o.config);
        if (*teleport) return emit(run_teleport(o.config, o.input), o.config);
        if (*model) return emit(run_model(o.config, o.model_file), o.config);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
