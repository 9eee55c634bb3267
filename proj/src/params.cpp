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

#include "cachecast/params.hpp"

#include "cachecast/errors.hpp"

#include <ostream>
#include <string>

namespace cachecast {

SchemeParams validate_params(int K, int L, int t, int N)
{
    auto fail = [&](const std::string &what) {
        throw InfeasibleParams("infeasible parameters (K=" + std::to_string(K) + ", L=" + std::to_string(L) +
                               ", t=" + std::to_string(t) + ", N=" + std::to_string(N) + "): " + what);
    };

    if (K < 1)
        fail("user count K must be positive");
    if (L < 1)
        fail("antenna count L must be positive");
    if (N < 1)
        fail("library size N must be positive");
    if (t < 1)
        fail("caching gain t must be at least 1");
    if (t > L)
        fail("caching gain t must not exceed antenna count L (t <= L)");
    if (t + L > K)
        fail("t + L must not exceed user count K (t + L <= K)");
    if (N < K)
        fail("library size N must be at least K (N >= K)");

    return SchemeParams{K, L, t, N};
}

std::ostream &operator<<(std::ostream &os, const SchemeParams &p)
{
    return os << "(K=" << p.K << ", L=" << p.L << ", t=" << p.t << ", N=" << p.N << ")";
}

} // namespace cachecast
