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

#include "cachecast/params.hpp"

#include <Eigen/Core>

#include <vector>

namespace cachecast {

/// Integer matrix with 1-based index values (users or parts) as entries.
using IndexMatrix = Eigen::MatrixXi;

/// (a mod K) + 1 for a in [1..K]; throws OutOfDomain otherwise.
int circular_increment(int a, int K);

/// Elementwise circular increment. Every entry must lie in [1..K].
IndexMatrix circular_increment(const IndexMatrix &m, int K);

/// Part-index matrix of round 1, (K - t) x (t + L).
IndexMatrix generate_r1(const SchemeParams &params);

/// User-index matrix of round 1, (K - t) x (t + L).
IndexMatrix generate_c1(const SchemeParams &params);

/**
 * One delivery round's pair of DP matrices. Row i of `users` lists the
 * t + L users targeted by the i-th interval of the round; the same row of
 * `parts` names the part each of them receives. Accessors are 1-based.
 */
struct DPMatrixPair {
    int round = 0;
    IndexMatrix parts; // R_k
    IndexMatrix users; // C_k

    [[nodiscard]] int rows() const { return static_cast<int>(parts.rows()); }
    [[nodiscard]] int cols() const { return static_cast<int>(parts.cols()); }
    [[nodiscard]] int part(int row, int col) const { return parts(row - 1, col - 1); }
    [[nodiscard]] int user(int row, int col) const { return users(row - 1, col - 1); }

    /// Users of one row in column order.
    [[nodiscard]] std::vector<int> row_users(int row) const;

    bool operator==(const DPMatrixPair &o) const
    {
        return round == o.round && parts == o.parts && users == o.users;
    }
};

struct DPFamily {
    SchemeParams params;
    std::vector<DPMatrixPair> pairs; // rounds 1..K in order

    [[nodiscard]] const DPMatrixPair &round(int k) const { return pairs.at(static_cast<std::size_t>(k - 1)); }
};

/// Increments both matrices of a pair and advances the round number.
DPMatrixPair next_round(const DPMatrixPair &pair, int K);

/// All K rounds: round 1 from generate_r1/generate_c1, then repeated
/// circular increments.
DPFamily generate_family(const SchemeParams &params);

} // namespace cachecast
