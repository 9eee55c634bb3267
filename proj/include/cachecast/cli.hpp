// SPDX-License-Identifier: Apache-2.0
//
// cachecast - linear-subpacketization coded caching for multi-antenna broadcast
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

#pragma once

#include "cachecast/run_config.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace cachecast::cli {

// Exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_usage = 2;

int cmd_placement(const RunConfig &config, std::ostream &out);
int cmd_dp(const RunConfig &config, std::ostream &out);
int cmd_schedule(const RunConfig &config, std::ostream &out);
int cmd_verify(const RunConfig &config, std::ostream &out);
int cmd_simulate(const RunConfig &config, std::ostream &out);
int cmd_compare(const RunConfig &config, std::ostream &out);
int cmd_sweep(const RunConfig &config, std::ostream &out);

/// Parses argv-style arguments (args[0] is the program name), runs the
/// subcommand and returns its exit code. Library errors become exit 2 for
/// invalid input and exit 1 otherwise.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace cachecast::cli
