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

#include "cachecast/dp_matrices.hpp"

#include "cachecast/errors.hpp"

#include <string>

namespace cachecast {

int circular_increment(int a, int K)
{
    if (K < 1 || a < 1 || a > K)
        throw OutOfDomain("circular increment: " + std::to_string(a) + " outside [1.." + std::to_string(K) + "]");
    return (a % K) + 1;
}

IndexMatrix circular_increment(const IndexMatrix &m, int K)
{
    return m.unaryExpr([K](int a) { return circular_increment(a, K); });
}

IndexMatrix generate_r1(const SchemeParams &params)
{
    const int K = params.K;
    const int t = params.t;
    const int L = params.L;
    IndexMatrix R(K - t, t + L);

    // Column j <= t lists the K - t parts user j misses, in the order
    // t+1, ..., K-t+j followed by the wrapped run j+1, ..., t.
    // Loops are 1-based; an empty range is a no-op.
    for (int j = 1; j <= t; ++j) {
        const int first_run = K - 2 * t + j;
        for (int i = 1; i <= first_run; ++i)
            R(i - 1, j - 1) = t + i;
        for (int i = first_run + 1; i <= K - t; ++i)
            R(i - 1, j - 1) = (j + 1) + (i - first_run - 1);
    }
    for (int j = t + 1; j <= t + L; ++j)
        for (int i = 1; i <= K - t; ++i)
            R(i - 1, j - 1) = 1;
    return R;
}

IndexMatrix generate_c1(const SchemeParams &params)
{
    const int K = params.K;
    const int t = params.t;
    const int L = params.L;
    IndexMatrix C(K - t, t + L);

    for (int j = 1; j <= t; ++j)
        for (int i = 1; i <= K - t; ++i)
            C(i - 1, j - 1) = j;
    for (int j = t + 1; j <= t + L; ++j)
        for (int i = 1; i <= K - t; ++i)
            C(i - 1, j - 1) = (j + i - 1 <= K) ? j + i - 1 : j + i - 1 - (K - t);
    return C;
}

std::vector<int> DPMatrixPair::row_users(int row) const
{
    std::vector<int> out(static_cast<std::size_t>(cols()));
    for (int j = 1; j <= cols(); ++j)
        out[static_cast<std::size_t>(j - 1)] = user(row, j);
    return out;
}

DPMatrixPair next_round(const DPMatrixPair &pair, int K)
{
    return DPMatrixPair{pair.round + 1, circular_increment(pair.parts, K), circular_increment(pair.users, K)};
}

DPFamily generate_family(const SchemeParams &params)
{
    DPFamily family{params, {}};
    family.pairs.reserve(static_cast<std::size_t>(params.K));
    family.pairs.push_back(DPMatrixPair{1, generate_r1(params), generate_c1(params)});
    for (int k = 2; k <= params.K; ++k)
        family.pairs.push_back(next_round(family.pairs.back(), params.K));
    return family;
}

} // namespace cachecast
