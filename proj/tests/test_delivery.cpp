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

#include "cachecast/delivery.hpp"
#include "cachecast/errors.hpp"
#include "oracles.hpp"

#include <set>

using namespace cachecast;

namespace {

const SchemeParams example = validate_params(6, 3, 2, 6);

using Cell = std::pair<int, int>; // (part, user)

std::set<Cell> cells(const TransmissionVector &x)
{
    std::set<Cell> out;
    for (const auto &term : x.terms)
        out.insert({term.part, term.user});
    return out;
}

} // namespace

TEST_CASE("counter initialization")
{
    const auto q = init_counters(example);
    CHECK(q.files() == 6);
    CHECK(q.parts() == 6);
    CHECK((q.table().array() == 1).all());

    const auto big = init_counters(validate_params(5, 3, 2, 9));
    CHECK(big.table().size() == 45);
    CHECK((big.table().array() == 1).all());
}

TEST_CASE("zero-forcing sets of the first interval")
{
    const auto V = build_placement_matrix(example);
    const auto family = generate_family(example);
    const auto &round1 = family.round(1);

    CHECK(generate_zf_set(round1, 1, 1, 3, V) == std::vector<int>{1, 3, 4});
    CHECK(generate_zf_set(round1, 1, 3, 1, V) == std::vector<int>{1, 2, 3});
    CHECK(generate_zf_set(round1, 1, 5, 1, V) == std::vector<int>{1, 2, 5});

    // Replacing user 4 (who caches part 3) in row 1 leaves a short set.
    auto crafted = round1;
    for (int j = 0; j < crafted.users.cols(); ++j)
        if (crafted.users(0, j) == 4)
            crafted.users(0, j) = 6;
    CHECK_THROWS_AS(generate_zf_set(crafted, 1, 1, 3, V), ZfSetSizeViolation);
}

TEST_CASE("schedule of the worked example matches the hand-built intervals")
{
    const auto schedule = build_schedule(example, Demand::identity(6));
    REQUIRE(schedule.vectors.size() == 24);

    using T = TransmissionTerm;
    const std::vector<std::vector<T>> expected = {
        {{1, 1, 3, 1, {1, 3, 4}}, {2, 2, 3, 1, {2, 3, 4}}, {3, 3, 1, 1, {1, 2, 3}}, {4, 4, 1, 1, {1, 2, 4}},
         {5, 5, 1, 1, {1, 2, 5}}},
        {{1, 1, 4, 1, {1, 4, 5}}, {2, 2, 4, 1, {2, 4, 5}}, {4, 4, 1, 2, {1, 2, 4}}, {5, 5, 1, 2, {1, 2, 5}},
         {6, 6, 1, 1, {1, 2, 6}}},
        {{1, 1, 5, 1, {1, 5, 6}}, {2, 2, 5, 1, {2, 5, 6}}, {5, 5, 1, 3, {1, 2, 5}}, {6, 6, 1, 2, {1, 2, 6}},
         {3, 3, 1, 2, {1, 2, 3}}},
        {{1, 1, 2, 1, {1, 2, 3}}, {2, 2, 6, 1, {1, 2, 6}}, {6, 6, 1, 3, {1, 2, 6}}, {3, 3, 1, 3, {1, 2, 3}},
         {4, 4, 1, 3, {1, 2, 4}}},
    };
    for (std::size_t s = 0; s < expected.size(); ++s) {
        INFO("interval " << s + 1);
        CHECK(schedule.vectors[s].s == static_cast<int>(s) + 1);
        CHECK(schedule.vectors[s].round == 1);
        CHECK(schedule.vectors[s].row == static_cast<int>(s) + 1);
        CHECK(schedule.vectors[s].terms == expected[s]);
    }

    // Second round: the shaded (part, user) cells of the diagonal shift.
    const std::vector<std::set<Cell>> round2 = {
        {{2, 4}, {2, 5}, {2, 6}, {4, 2}, {4, 3}},
        {{2, 5}, {2, 6}, {2, 1}, {5, 2}, {5, 3}},
        {{2, 6}, {2, 1}, {2, 4}, {6, 2}, {6, 3}},
        {{2, 1}, {2, 4}, {2, 5}, {3, 2}, {1, 3}},
    };
    for (std::size_t s = 0; s < round2.size(); ++s) {
        INFO("interval " << s + 5);
        CHECK(schedule.vectors[s + 4].round == 2);
        CHECK(cells(schedule.vectors[s + 4]) == round2[s]);
    }
}

TEST_CASE("schedule delivers exactly the missing triples")
{
    const auto schedule = build_schedule(example, Demand::identity(6));
    std::size_t terms = 0;
    for (const auto &x : schedule.vectors)
        terms += x.terms.size();
    CHECK(terms == 120);
    const auto V = oracle::placement(6, 2);
    CHECK(oracle::delivered_triples(schedule) == oracle::missing_triples(V, 5));
}

TEST_CASE("diagonal shift between consecutive rounds")
{
    for (const auto &c : oracle::all_configs(12)) {
        const auto params = validate_params(c.K, c.L, c.t, c.K);
        const auto schedule = build_schedule(params, Demand::identity(c.K));
        const auto step = static_cast<std::size_t>(c.K - c.t);
        INFO("K=" << c.K << " t=" << c.t << " L=" << c.L);
        for (std::size_t s = 0; s + step < schedule.vectors.size(); ++s) {
            const auto &a = schedule.vectors[s].terms;
            const auto &b = schedule.vectors[s + step].terms;
            REQUIRE(a.size() == b.size());
            for (std::size_t j = 0; j < a.size(); ++j) {
                REQUIRE(b[j].user == a[j].user % c.K + 1);
                REQUIRE(b[j].part == a[j].part % c.K + 1);
                std::set<int> zf;
                for (int u : a[j].zf_set)
                    zf.insert(u % c.K + 1);
                REQUIRE(std::set<int>(b[j].zf_set.begin(), b[j].zf_set.end()) == zf);
            }
        }
    }
}

TEST_CASE("non-identity demands")
{
    const auto params = validate_params(6, 3, 2, 10);
    const auto demand = Demand::from_files({7, 2, 9, 4, 10, 1}, 10);
    const auto schedule = build_schedule(params, demand);
    REQUIRE(schedule.vectors.size() == 24);
    for (const auto &x : schedule.vectors)
        for (const auto &term : x.terms)
            REQUIRE(term.file == demand.file_of(term.user));

    // Subpart bookkeeping follows the user, whatever file it asked for.
    const auto identity = build_schedule(params, Demand::identity(6));
    for (std::size_t s = 0; s < schedule.vectors.size(); ++s)
        for (std::size_t j = 0; j < schedule.vectors[s].terms.size(); ++j) {
            REQUIRE(schedule.vectors[s].terms[j].subpart == identity.vectors[s].terms[j].subpart);
            REQUIRE(schedule.vectors[s].terms[j].zf_set == identity.vectors[s].terms[j].zf_set);
        }
}

TEST_CASE("demand errors")
{
    CHECK_THROWS_AS(build_schedule(example, Demand::from_files({1, 2, 3, 4, 5, 5}, 6)), DuplicateDemand);
    CHECK_FALSE(Demand::from_files({1, 1}, 3).injective());
    CHECK(Demand::identity(4).injective());
    CHECK_THROWS_AS(Demand::from_files({1, 2, 7}, 6), InvalidInput);
    CHECK_THROWS_AS(build_schedule(example, Demand::identity(5)), InvalidInput);
}

TEST_CASE("subpart overflow on an inconsistent family")
{
    const auto V = build_placement_matrix(example);
    auto family = generate_family(example);
    // Replaying round 1 sends the same parts again until counters overflow.
    for (auto &pair : family.pairs) {
        const int round = pair.round;
        pair = family.pairs.front();
        pair.round = round;
    }
    CHECK_THROWS_AS(build_schedule(example, V, family, Demand::identity(6)), SubpartOverflow);
}

TEST_CASE("symbol identifiers are unique per data portion")
{
    const auto params = validate_params(5, 2, 2, 7);
    std::set<std::int64_t> ids;
    for (int n = 1; n <= 7; ++n)
        for (int p = 1; p <= 5; ++p)
            for (int q = 1; q <= 4; ++q)
                ids.insert(symbol_id(params, n, p, q));
    CHECK(ids.size() == 7u * 5u * 4u);
    CHECK(*ids.begin() == 0);
}

TEST_CASE("schedules are deterministic")
{
    const auto params = validate_params(9, 4, 3, 9);
    CHECK(build_schedule(params, Demand::identity(9)) == build_schedule(params, Demand::identity(9)));
}
