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

#include "cachecast/placement.hpp"

#include "cachecast/errors.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace cachecast {

void validate_placement_matrix(const BinaryMatrix &entries, int t)
{
    const auto P = entries.rows();
    const auto K = entries.cols();
    if (P < 1 || K < 1)
        throw InvalidPlacement("placement matrix must be non-empty");
    if (t < 1 || t > K)
        throw InvalidPlacement("caching gain t=" + std::to_string(t) + " out of range for K=" + std::to_string(K));
    if ((entries.array() > 1).any())
        throw InvalidPlacement("placement matrix entries must be 0 or 1");
    if ((P * t) % K != 0)
        throw InvalidPlacement("P t / K must be an integer (P=" + std::to_string(P) + ", t=" + std::to_string(t) +
                               ", K=" + std::to_string(K) + ")");

    const Eigen::MatrixXi counts = entries.cast<int>();
    const Eigen::VectorXi row_sums = counts.rowwise().sum();
    const Eigen::RowVectorXi col_sums = counts.colwise().sum();
    const auto per_column = static_cast<int>(P * t / K);

    for (Eigen::Index p = 0; p < P; ++p)
        if (row_sums(p) != t)
            throw InvalidPlacement("row " + std::to_string(p + 1) + " sums to " + std::to_string(row_sums(p)) +
                                   ", expected t=" + std::to_string(t));
    for (Eigen::Index k = 0; k < K; ++k)
        if (col_sums(k) != per_column)
            throw InvalidPlacement("column " + std::to_string(k + 1) + " sums to " + std::to_string(col_sums(k)) +
                                   ", expected P t / K=" + std::to_string(per_column));
}

PlacementMatrix::PlacementMatrix(BinaryMatrix entries, int t) : entries_(std::move(entries)), t_(t)
{
    validate_placement_matrix(entries_, t_);
}

std::vector<int> PlacementMatrix::users_caching(int part) const
{
    std::vector<int> out;
    for (int k = 1; k <= users(); ++k)
        if (cached(part, k))
            out.push_back(k);
    return out;
}

std::vector<int> PlacementMatrix::parts_cached_by(int user) const
{
    std::vector<int> out;
    for (int p = 1; p <= parts(); ++p)
        if (cached(p, user))
            out.push_back(p);
    return out;
}

PlacementMatrix build_placement_matrix(const SchemeParams &params)
{
    const int K = params.K;
    BinaryMatrix V = BinaryMatrix::Zero(K, K);
    // Row p (0-based) has its run of t ones starting at column p, wrapping.
    for (int p = 0; p < K; ++p)
        for (int j = 0; j < params.t; ++j)
            V(p, (p + j) % K) = 1;
    return PlacementMatrix(std::move(V), params.t);
}

PlacementMatrix build_placement_matrix(const SchemeParams &params, int parts)
{
    if (parts != params.K)
        throw InvalidPlacement("only P = K placement matrices can be generated (requested P=" +
                               std::to_string(parts) + ", K=" + std::to_string(params.K) + ")");
    return build_placement_matrix(params);
}

CacheContents::CacheContents(int user, int files, int subparts, std::vector<int> parts)
    : user_(user), files_(files), subparts_(subparts), parts_(std::move(parts))
{
    std::sort(parts_.begin(), parts_.end());
    const int max_part = parts_.empty() ? 0 : parts_.back();
    part_mask_.assign(static_cast<std::size_t>(max_part) + 1, false);
    for (int p : parts_)
        part_mask_[static_cast<std::size_t>(p)] = true;
}

bool CacheContents::contains(int file, int part, int subpart) const
{
    if (file < 1 || file > files_ || subpart < 1 || subpart > subparts_ || part < 1)
        return false;
    return static_cast<std::size_t>(part) < part_mask_.size() && part_mask_[static_cast<std::size_t>(part)];
}

std::vector<CacheEntry> CacheContents::entries() const
{
    std::vector<CacheEntry> out;
    out.reserve(size());
    for (int n = 1; n <= files_; ++n)
        for (int p : parts_)
            for (int q = 1; q <= subparts_; ++q)
                out.push_back({n, p, q});
    return out;
}

CacheContents cache_contents(const SchemeParams &params, const PlacementMatrix &V, int user)
{
    if (user < 1 || user > params.K)
        throw UserOutOfRange("user " + std::to_string(user) + " outside [1.." + std::to_string(params.K) + "]");
    return CacheContents(user, params.N, params.served_per_interval(), V.parts_cached_by(user));
}

} // namespace cachecast
