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

#include <iosfwd>

namespace cachecast {

/// Validated network parameters of the scheme.
///
/// K users, L transmit antennas, global caching gain t and a library of N
/// files. Only instances returned by validate_params() satisfy the scheme's
/// feasibility conditions (1 <= t <= L, t + L <= K, N >= K).
struct SchemeParams {
    int K = 0;
    int L = 0;
    int t = 0;
    int N = 0;

    /// Number of transmission intervals S = K (K - t).
    [[nodiscard]] int intervals() const { return K * (K - t); }

    /// Intervals per delivery round.
    [[nodiscard]] int intervals_per_round() const { return K - t; }

    /// Users served in every interval, and subparts per file part.
    [[nodiscard]] int served_per_interval() const { return t + L; }

    /// Pieces each file is split into: K parts of t + L subparts each.
    [[nodiscard]] int subpacketization() const { return K * (t + L); }

    /// Cached fraction of every file at every user, M/N = t/K.
    [[nodiscard]] double cache_fraction() const { return static_cast<double>(t) / K; }

    bool operator==(const SchemeParams &) const = default;
};

/// Checks the feasibility conditions and returns the parameter tuple.
/// Throws InfeasibleParams naming the first violated condition.
SchemeParams validate_params(int K, int L, int t, int N);

std::ostream &operator<<(std::ostream &os, const SchemeParams &p);

} // namespace cachecast
