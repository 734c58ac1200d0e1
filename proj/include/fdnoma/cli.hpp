// SPDX-License-Identifier: Apache-2.0
//
// fdnoma: antenna selection analysis for full-duplex cooperative NOMA relaying
// Copyright (C) 2026 The fdnoma authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef FDNOMA_CLI_HPP
#define FDNOMA_CLI_HPP

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "fdnoma/config.hpp"

namespace fdnoma
{

enum ExitCode : int
{
    exit_success = 0,
    exit_usage = 1,
    exit_config_invalid = 2,
    exit_validation_failure = 3,
};

struct ValidationCheck
{
    std::string name;
    bool passed;
    std::string detail;
};

struct ValidateOptions
{
    std::uint64_t trials = 200'000;
    std::uint64_t seed = 1;
    double se_window = 4.0; // Monte Carlo vs analytic tolerance, in standard errors
    unsigned workers = 0;
    bool inject_failure = false; // appends a failing check, for exercising the report path
};

std::vector<ValidationCheck> run_validation(const SystemParams& params, const ValidateOptions& opts);

void print_validation_report(std::ostream& os, std::span<const ValidationCheck> checks);

// Entry point of the `fdnoma` tool: `sweep` and `validate` subcommands.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace fdnoma

#endif // FDNOMA_CLI_HPP
