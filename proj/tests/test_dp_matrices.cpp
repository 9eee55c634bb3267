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

#include "cachecast/dp_matrices.hpp"
#include "cachecast/errors.hpp"
#include "cachecast/placement.hpp"
#include "oracles.hpp"

#include <set>

using namespace cachecast;

namespace {

IndexMatrix rows(std::initializer_list<std::initializer_list<int>> values)
{
    IndexMatrix m(static_cast<Eigen::Index>(values.size()), static_cast<Eigen::Index>(values.begin()->size()));
    Eigen::Index i = 0;
    for (const auto &r : values) {
        Eigen::Index j = 0;
        for (int v : r)
            m(i, j++) = v;
        ++i;
    }
    return m;
}

const SchemeParams example = validate_params(6, 3, 2, 6);

} // namespace

TEST_CASE("circular increment")
{
    CHECK(circular_increment(3, 6) == 4);
    CHECK(circular_increment(6, 6) == 1);
    CHECK(circular_increment(2, 6) == 3);
    CHECK(circular_increment(1, 1) == 1);
    CHECK_THROWS_AS(circular_increment(0, 6), OutOfDomain);
    CHECK_THROWS_AS(circular_increment(7, 6), OutOfDomain);

    const IndexMatrix m = rows({{1, 6}, {3, 5}});
    CHECK(circular_increment(m, 6) == rows({{2, 1}, {4, 6}}));
    CHECK_THROWS_AS(circular_increment(rows({{0}}), 6), OutOfDomain);
}

TEST_CASE("round 1 and 2 DP matrices of the worked example")
{
    const IndexMatrix R1 = rows({{3, 3, 1, 1, 1}, {4, 4, 1, 1, 1}, {5, 5, 1, 1, 1}, {2, 6, 1, 1, 1}});
    const IndexMatrix C1 = rows({{1, 2, 3, 4, 5}, {1, 2, 4, 5, 6}, {1, 2, 5, 6, 3}, {1, 2, 6, 3, 4}});
    const IndexMatrix R2 = rows({{4, 4, 2, 2, 2}, {5, 5, 2, 2, 2}, {6, 6, 2, 2, 2}, {3, 1, 2, 2, 2}});
    const IndexMatrix C2 = rows({{2, 3, 4, 5, 6}, {2, 3, 5, 6, 1}, {2, 3, 6, 1, 4}, {2, 3, 1, 4, 5}});

    CHECK(generate_r1(example) == R1);
    CHECK(generate_c1(example) == C1);

    const auto family = generate_family(example);
    REQUIRE(family.pairs.size() == 6);
    CHECK(family.round(1).parts == R1);
    CHECK(family.round(1).users == C1);
    CHECK(family.round(2).parts == R2);
    CHECK(family.round(2).users == C2);
    CHECK(family.round(2).row_users(3) == std::vector<int>{2, 3, 6, 1, 4});
    CHECK(family.round(2).round == 2);
}

TEST_CASE("R_1 with a single caching column")
{
    const auto R = generate_r1(validate_params(5, 4, 1, 5));
    CHECK(R == rows({{2, 1, 1, 1, 1}, {3, 1, 1, 1, 1}, {4, 1, 1, 1, 1}, {5, 1, 1, 1, 1}}));
}

TEST_CASE("R_1 and C_1 structure over all valid parameters")
{
    for (const auto &c : oracle::all_configs(15)) {
        const auto params = validate_params(c.K, c.L, c.t, c.K);
        INFO("K=" << c.K << " t=" << c.t << " L=" << c.L);
        const auto R = generate_r1(params);
        const auto C = generate_c1(params);
        REQUIRE(R.rows() == c.K - c.t);
        REQUIRE(R.cols() == c.t + c.L);

        REQUIRE(R == oracle::r1_closed_form(c.K, c.t, c.L));
        REQUIRE((R.rightCols(c.L).array() == 1).all());

        for (int j = 1; j <= c.t + c.L; ++j)
            REQUIRE(C(0, j - 1) == j);
        for (int j = 1; j <= c.t; ++j)
            REQUIRE((C.col(j - 1).array() == j).all());
        for (int j = c.t + 1; j <= c.t + c.L; ++j)
            for (int i = 1; i <= c.K - c.t; ++i)
                if (j + i - 1 > c.K) {
                    REQUIRE(C(i - 1, j - 1) >= c.t + 1);
                    REQUIRE(C(i - 1, j - 1) <= c.t + c.L);
                }
    }
}

TEST_CASE("printed R_1 wrap-around value agrees only while t <= 2")
{
    for (const auto &c : oracle::all_configs(15)) {
        const auto params = validate_params(c.K, c.L, c.t, c.K);
        const bool same = generate_r1(params) == oracle::r1_as_printed(c.K, c.t, c.L);
        INFO("K=" << c.K << " t=" << c.t << " L=" << c.L);
        CHECK(same == (c.t <= 2));
    }

    // K = 6, t = 3: the printed value sends part 2 to user 2, which caches it.
    const auto params = validate_params(6, 3, 3, 6);
    const auto V = build_placement_matrix(params);
    const auto printed = oracle::r1_as_printed(6, 3, 3);
    CHECK(printed(2, 1) == 2);
    CHECK(V.cached(2, 2));
    CHECK(generate_r1(params)(2, 1) == 3);
    CHECK_FALSE(V.cached(3, 2));
}

TEST_CASE("DP family invariants over all valid parameters")
{
    for (const auto &c : oracle::all_configs(15)) {
        const auto params = validate_params(c.K, c.L, c.t, c.K);
        const auto V = build_placement_matrix(params);
        const auto family = generate_family(params);
        INFO("K=" << c.K << " t=" << c.t << " L=" << c.L);
        REQUIRE(static_cast<int>(family.pairs.size()) == c.K);

        // A full cycle of increments returns to round 1.
        REQUIRE(next_round(family.round(c.K), c.K).parts == family.round(1).parts);
        REQUIRE(next_round(family.round(c.K), c.K).users == family.round(1).users);

        for (const auto &pair : family.pairs) {
            REQUIRE((pair.parts.array() >= 1).all());
            REQUIRE((pair.parts.array() <= c.K).all());
            REQUIRE((pair.users.array() >= 1).all());
            REQUIRE((pair.users.array() <= c.K).all());
            if (pair.round > 1) {
                const auto &prev = family.round(pair.round - 1);
                REQUIRE(pair.parts == circular_increment(prev.parts, c.K));
                REQUIRE(pair.users == circular_increment(prev.users, c.K));
            }
            for (int i = 1; i <= pair.rows(); ++i) {
                const auto users = pair.row_users(i);
                REQUIRE(std::set<int>(users.begin(), users.end()).size() == users.size());

                for (int j = 1; j <= pair.cols(); ++j) {
                    const int part = pair.part(i, j);
                    REQUIRE_FALSE(V.cached(part, pair.user(i, j)));

                    // Users of the row caching this part: t of them overall;
                    // for the antenna columns they are exactly the first t.
                    int in_row = 0;
                    int in_first = 0;
                    for (int r = 1; r <= pair.cols(); ++r)
                        if (V.cached(part, pair.user(i, r))) {
                            ++in_row;
                            in_first += (r <= c.t);
                        }
                    REQUIRE(in_row == c.t);
                    if (j > c.t)
                        REQUIRE(in_first == c.t);
                }
            }
        }
    }
}
