// Copyright 2026 The qetsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>

#include "qetsim/config.hpp"

namespace qetsim::cli {

// Exit codes: 0 success, 1 invariant/tolerance failure, 2 config error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitToleranceFailure = 1;
inline constexpr int kExitConfigError = 2;

int cmd_fig1(const RunConfig& config, std::ostream& out);
int cmd_fig2(const RunConfig& config, std::ostream& out);
int cmd_custom(const RunConfig& config, std::ostream& out);
int cmd_verify(const RunConfig& config, std::ostream& out);

/// Dispatches on config.mode; catches ConfigError / invalid input and maps
/// them to the documented exit codes.
int run_command(const RunConfig& config, std::ostream& out,
                std::ostream& err);

}  // namespace qetsim::cli
