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

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace cachecast {

/// Everything a CLI invocation needs. Zero N means N = K; an empty demand
/// means the identity demand.
struct RunConfig {
    std::string subcommand;
    int K = 0;
    int L = 0;
    int t = 0;
    int N = 0;
    std::vector<int> demand;
    std::uint64_t seed = 0;
    double noise_power = 0.0;
    std::string out;
    std::string format = "json";
    std::vector<int> user_range; // compare
    int max_users = 0;           // sweep
    std::string schedule_path;   // verify/simulate an external schedule

    [[nodiscard]] int library_size() const { return N > 0 ? N : K; }

    bool operator==(const RunConfig &) const = default;
};

nlohmann::ordered_json to_json(const RunConfig &c);
RunConfig run_config_from_json(const nlohmann::ordered_json &j);

/// "5..10" -> {5,...,10}; "5,7,9" -> {5,7,9}; "6" -> {6}.
std::vector<int> parse_int_list(const std::string &spec);

} // namespace cachecast
