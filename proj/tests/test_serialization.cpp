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

#include <catch_amalgamated.hpp>

#include "cachecast/errors.hpp"
#include "cachecast/run_config.hpp"
#include "cachecast/serialization.hpp"

using namespace cachecast;

namespace {

const SchemeParams example = validate_params(6, 3, 2, 6);

} // namespace

TEST_CASE("parameters round trip")
{
    const auto j = to_json(example);
    CHECK(j.dump() == R"({"K":6,"L":3,"t":2,"N":6})");
    CHECK(params_from_json(j) == example);
    CHECK_THROWS_AS(params_from_json(Json{{"K", 6}, {"L", 3}, {"t", 4}, {"N", 6}}), InfeasibleParams);
    CHECK_THROWS_AS(params_from_json(Json{{"K", 6}}), InvalidInput);
}

TEST_CASE("placement forms")
{
    const auto V = build_placement_matrix(example);
    const auto j = to_json(V);
    CHECK(j.at("K") == 6);
    CHECK(j.at("t") == 2);
    CHECK(j.at("indexing") == "1-based");
    CHECK(j.at("rows").size() == 6);
    CHECK(j.at("rows")[0].dump() == "[1,1,0,0,0,0]");
    CHECK(placement_from_json(j) == V);

    CHECK(to_text(V) == "1 1 0 0 0 0\n0 1 1 0 0 0\n0 0 1 1 0 0\n0 0 0 1 1 0\n0 0 0 0 1 1\n1 0 0 0 0 1\n");

    auto bad = j;
    bad["rows"][0][2] = 1;
    CHECK_THROWS_AS(placement_from_json(bad), InvalidPlacement);
}

TEST_CASE("index matrices")
{
    IndexMatrix m(2, 3);
    m << 1, 2, 3, 4, 5, 6;
    const auto j = to_json(m);
    CHECK(j.dump() == "[[1,2,3],[4,5,6]]");
    CHECK(index_matrix_from_json(j) == m);
    CHECK_THROWS_AS(index_matrix_from_json(Json::parse("[[1,2],[3]]")), InvalidInput);
}

TEST_CASE("DP family JSON")
{
    const auto j = to_json(generate_family(example));
    REQUIRE(j.size() == 6);
    CHECK(j[0].at("round") == 1);
    CHECK(j[0].at("R").dump() == "[[3,3,1,1,1],[4,4,1,1,1],[5,5,1,1,1],[2,6,1,1,1]]");
    CHECK(j[0].at("C").dump() == "[[1,2,3,4,5],[1,2,4,5,6],[1,2,5,6,3],[1,2,6,3,4]]");
}

TEST_CASE("schedule JSON round trip")
{
    const auto schedule = build_schedule(example, Demand::from_files({2, 1, 6, 5, 4, 3}, 6));
    const auto j = to_json(schedule);
    CHECK(j.at("vectors").size() == 24);
    CHECK(j.at("vectors")[0].at("terms")[0].dump() ==
          R"({"user":1,"file":2,"part":3,"subpart":1,"zf_set":[1,3,4]})");
    const auto back = schedule_from_json(Json::parse(j.dump()));
    CHECK(back == schedule);
    CHECK(to_json(back).dump() == j.dump());

    auto broken = j;
    broken["vectors"][0].erase("terms");
    CHECK_THROWS(schedule_from_json(broken));
    CHECK_THROWS_AS(schedule_from_json(Json::array()), InvalidInput);
}

TEST_CASE("schedule text listing")
{
    const auto text = to_text(build_schedule(example, Demand::identity(6)));
    const auto first = text.substr(0, text.find('\n'));
    CHECK(first == "x(1) = W1_3^1 v{1,3,4} + W2_3^1 v{2,3,4} + W3_1^1 v{1,2,3} + W4_1^1 v{1,2,4} + W5_1^1 v{1,2,5}");
    CHECK(std::count(text.begin(), text.end(), '\n') == 24);
}

TEST_CASE("verification report JSON")
{
    const auto j = to_json(verify_all(example, Demand::identity(6)));
    CHECK(j.at("passed") == true);
    CHECK(j.at("intervals") == 24);
    CHECK(j.at("subpacketization") == 30);
    CHECK(j.at("checks").size() == 7);
    CHECK(j.at("checks")[0].at("counterexample").is_null());
    CHECK(j.at("dof_per_interval").size() == 24);
    CHECK(j.at("per_part_appearance_counts").size() == 24);
    CHECK(j.at("per_part_appearance_counts")[0].dump() == R"({"user":1,"part":2,"count":5})");
}

TEST_CASE("simulation summary JSON")
{
    SimulationSummary s;
    s.intervals = 2;
    s.served_per_interval = 5;
    s.seed = 9;
    s.interval_success = {true, false};
    s.failures.push_back({2, 4, "residual"});
    const auto j = to_json(s);
    CHECK(j.at("passed") == false);
    CHECK(j.at("interval_success").dump() == "[true,false]");
    CHECK(j.at("failures")[0].dump() == R"({"interval":2,"user":4,"reason":"residual"})");
}

TEST_CASE("metrics JSON and big integers")
{
    CHECK(big_to_json(BigInt(129200)) == 129200);
    const BigInt huge = binomial(200, 100);
    CHECK(big_to_json(huge) == huge.str());

    const auto j = to_json(metrics_new(6, 2, 3));
    CHECK(j.at("scheme") == "new");
    CHECK(j.at("subpacketization") == 30);
    CHECK(j.at("dof") == 5);

    const auto series = comparison_series_json(comparison_table(2, 3, {5, 6}));
    CHECK(series.dump().find("945") == std::string::npos);
    CHECK(series.dump().find("45") != std::string::npos);
}

TEST_CASE("run configuration round trip")
{
    RunConfig c;
    c.subcommand = "simulate";
    c.K = 6;
    c.L = 3;
    c.t = 2;
    c.demand = {2, 1, 3, 4, 5, 6};
    c.seed = 42;
    c.noise_power = 0.25;
    c.out = "x.json";
    c.user_range = {5, 6};
    c.max_users = 10;
    CHECK(run_config_from_json(to_json(c)) == c);
    CHECK(c.library_size() == 6);
    c.N = 9;
    CHECK(c.library_size() == 9);
}

TEST_CASE("integer list parsing")
{
    CHECK(parse_int_list("5..10") == std::vector<int>{5, 6, 7, 8, 9, 10});
    CHECK(parse_int_list("5,7,9") == std::vector<int>{5, 7, 9});
    CHECK(parse_int_list("6") == std::vector<int>{6});
    CHECK_THROWS_AS(parse_int_list("10..5"), InvalidInput);
    CHECK_THROWS_AS(parse_int_list("a,b"), InvalidInput);
    CHECK_THROWS_AS(parse_int_list(""), InvalidInput);
}
