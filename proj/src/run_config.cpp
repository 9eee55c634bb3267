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

#include "cachecast/run_config.hpp"

#include "cachecast/errors.hpp"

#include <charconv>
#include <string_view>

namespace cachecast {

nlohmann::ordered_json to_json(const RunConfig &c)
{
    return nlohmann::ordered_json{{"subcommand", c.subcommand},
                                  {"K", c.K},
                                  {"L", c.L},
                                  {"t", c.t},
                                  {"N", c.N},
                                  {"demand", c.demand},
                                  {"seed", c.seed},
                                  {"noise_power", c.noise_power},
                                  {"out", c.out},
                                  {"format", c.format},
                                  {"user_range", c.user_range},
                                  {"max_users", c.max_users},
                                  {"schedule_path", c.schedule_path}};
}

RunConfig run_config_from_json(const nlohmann::ordered_json &j)
{
    RunConfig c;
    c.subcommand = j.value("subcommand", c.subcommand);
    c.K = j.value("K", c.K);
    c.L = j.value("L", c.L);
    c.t = j.value("t", c.t);
    c.N = j.value("N", c.N);
    c.demand = j.value("demand", c.demand);
    c.seed = j.value("seed", c.seed);
    c.noise_power = j.value("noise_power", c.noise_power);
    c.out = j.value("out", c.out);
    c.format = j.value("format", c.format);
    c.user_range = j.value("user_range", c.user_range);
    c.max_users = j.value("max_users", c.max_users);
    c.schedule_path = j.value("schedule_path", c.schedule_path);
    return c;
}

namespace {

int parse_int(std::string_view s)
{
    int value = 0;
    const auto *end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, value);
    if (ec != std::errc{} || ptr != end || s.empty())
        throw InvalidInput("not an integer: '" + std::string(s) + "'");
    return value;
}

} // namespace

std::vector<int> parse_int_list(const std::string &spec)
{
    std::vector<int> out;
    if (const auto dots = spec.find(".."); dots != std::string::npos) {
        const int lo = parse_int(std::string_view(spec).substr(0, dots));
        const int hi = parse_int(std::string_view(spec).substr(dots + 2));
        if (lo > hi)
            throw InvalidInput("empty range '" + spec + "'");
        for (int v = lo; v <= hi; ++v)
            out.push_back(v);
        return out;
    }
    std::size_t start = 0;
    while (start <= spec.size()) {
        const auto comma = spec.find(',', start);
        const auto piece = std::string_view(spec).substr(start, comma == std::string::npos ? std::string::npos
                                                                                          : comma - start);
        out.push_back(parse_int(piece));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return out;
}

} // namespace cachecast
