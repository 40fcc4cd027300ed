// Copyright 2026 The opdist Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "capi_handles.hpp"
#include "commands.hpp"

namespace {

using opdist_cli::RunConfig;

void add_common(CLI::App *sub, RunConfig &cfg) {
    sub->add_option("--dim,-d", cfg.dim, "Hilbert-space dimension")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seeds, "RNG seed (repeatable)");
    sub->add_option("--num-seeds", cfg.num_seeds,
                    "Use seeds s, s+1, ... from the first --seed");
    sub->add_option("--tol", cfg.tol, "Check tolerance");
    sub->add_option("--out,-o", cfg.out, "Output path, '-' for stdout");
    sub->add_option("--format", cfg.format, "json or csv");
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Operational distance between quantum states measured in "
                 "mutually unbiased bases"};
    app.set_version_flag("--version", std::string(opdist_version()));
    app.require_subcommand(1);

    RunConfig cfg;

    auto *mub = app.add_subcommand("mub", "Build and verify the MUB set");
    add_common(mub, cfg);
    mub->add_option("--self-test", cfg.self_test,
                    "corrupt-mub: duplicate a basis to exercise failure");

    auto *distance = app.add_subcommand(
        "distance", "Total distance, fidelity and information for two states");
    add_common(distance, cfg);
    distance->add_option("--kind", cfg.kind, "mixed or pure");
    distance->add_flag("--identical", cfg.identical, "Use the same state twice");
    distance->add_option("--self-test", cfg.self_test, "corrupt-mub");

    auto *equivalence = app.add_subcommand(
        "equivalence", "Compare total distance with the Hilbert-Schmidt distance");
    add_common(equivalence, cfg);
    equivalence->add_option("--trials", cfg.trials, "State pairs per seed");
    equivalence->add_flag("--identical", cfg.identical,
                          "Use identical states in every pair");
    equivalence->add_option("--self-test", cfg.self_test, "corrupt-mub");

    auto *ordering = app.add_subcommand(
        "ordering", "Search for fidelity/distance ordering disagreements");
    add_common(ordering, cfg);
    ordering->add_option("--trials", cfg.trials, "Test pairs per seed");
    ordering->add_option("--mode", cfg.mode, "mixed, pure or both");

    auto *shots = app.add_subcommand(
        "shots", "Finite-shot estimates of the total distance");
    add_common(shots, cfg);
    shots->add_option("--shots", cfg.shots, "Shots per basis (repeatable)");
    shots->add_option("--pair", cfg.pair, "random, orthogonal or h-vs-45");
    shots->add_option("--pair-seed", cfg.pair_seed, "Seed for the random pair");
    shots->add_flag("--bias-corrected", cfg.bias_corrected,
                    "Subtract the finite-sample bias");

    auto *tomography = app.add_subcommand(
        "tomography", "Three-polarizer tomography of two polarization qubits");
    add_common(tomography, cfg);
    tomography->add_option("--shots", cfg.shots,
                           "Shots per polarizer setting (repeatable)");
    tomography->add_option("--pair", cfg.pair, "h-vs-45, random or orthogonal");
    tomography->add_option("--pair-seed", cfg.pair_seed,
                           "Seed for the random pair");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return opdist_cli::kExitBadConfig;
    }
    for (const auto *sub : app.get_subcommands()) {
        cfg.command = sub->get_name();
    }
    return opdist_cli::run(cfg);
}
