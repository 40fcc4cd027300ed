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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace opdist_cli {

/// Everything a run depends on; echoed into every output file.
struct RunConfig {
    std::string command;
    std::size_t dim = 2;
    std::vector<std::uint64_t> seeds;
    std::size_t num_seeds = 0;
    std::size_t trials = 1;
    std::vector<std::uint64_t> shots;
    double tol = 1e-9;
    std::string out = "-";
    std::string format;
    std::string self_test;
    std::string mode = "both";
    std::string pair;
    std::uint64_t pair_seed = 7;
    std::string kind = "mixed";
    bool bias_corrected = false;
    bool identical = false;
};

nlohmann::json to_json(const RunConfig &cfg);

/// Fills in defaults that depend on the command and validates the config.
/// Throws CommandError(kExitBadConfig) on invalid input.
void finalize(RunConfig &cfg);

/// Dispatches on cfg.command; returns the process exit code.
int run(RunConfig cfg);

int cmd_mub(const RunConfig &cfg);
int cmd_distance(const RunConfig &cfg);
int cmd_equivalence(const RunConfig &cfg);
int cmd_ordering(const RunConfig &cfg);
int cmd_shots(const RunConfig &cfg);

} // namespace opdist_cli
