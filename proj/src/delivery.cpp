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

#include "cachecast/delivery.hpp"

#include "cachecast/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace cachecast {

Demand Demand::identity(int users)
{
    std::vector<int> files(static_cast<std::size_t>(users));
    std::iota(files.begin(), files.end(), 1);
    return Demand(std::move(files));
}

Demand Demand::from_files(std::vector<int> files, int library_size)
{
    for (std::size_t k = 0; k < files.size(); ++k)
        if (files[k] < 1 || files[k] > library_size)
            throw InvalidInput("user " + std::to_string(k + 1) + " requests file " + std::to_string(files[k]) +
                               " outside [1.." + std::to_string(library_size) + "]");
    return Demand(std::move(files));
}

bool Demand::injective() const
{
    return std::set<int>(files_.begin(), files_.end()).size() == files_.size();
}

SubpartCounters init_counters(const SchemeParams &params)
{
    return SubpartCounters(params.N, params.K);
}

std::vector<int> generate_zf_set(const DPMatrixPair &pair, int row, int user, int part, const PlacementMatrix &V)
{
    std::set<int> zf{user};
    for (int r = 1; r <= pair.cols(); ++r) {
        const int node = pair.user(row, r);
        if (V.cached(part, node))
            zf.insert(node);
    }
    if (static_cast<int>(zf.size()) != V.gain() + 1)
        throw ZfSetSizeViolation("round " + std::to_string(pair.round) + ", row " + std::to_string(row) +
                                 ", user " + std::to_string(user) + ", part " + std::to_string(part) +
                                 ": zero-forcing set has " + std::to_string(zf.size()) + " members, expected t+1=" +
                                 std::to_string(V.gain() + 1));
    return {zf.begin(), zf.end()};
}

std::int64_t symbol_id(const SchemeParams &params, int file, int part, int subpart)
{
    const std::int64_t K = params.K;
    const std::int64_t Q = params.served_per_interval();
    return ((static_cast<std::int64_t>(file) - 1) * K + (part - 1)) * Q + (subpart - 1);
}

std::vector<int> TransmissionVector::targeted_users() const
{
    std::vector<int> out;
    out.reserve(terms.size());
    for (const auto &term : terms)
        out.push_back(term.user);
    return out;
}

Schedule build_schedule(const SchemeParams &params, const PlacementMatrix &V, const DPFamily &family,
                        const Demand &demand)
{
    if (demand.users() != params.K)
        throw InvalidInput("demand covers " + std::to_string(demand.users()) + " users, expected K=" +
                           std::to_string(params.K));
    for (int f : demand.files())
        if (f < 1 || f > params.N)
            throw InvalidInput("demanded file " + std::to_string(f) + " outside [1.." + std::to_string(params.N) + "]");
    if (!demand.injective())
        throw DuplicateDemand("repeated file requests are not supported; every user must demand a distinct file");
    if (static_cast<int>(family.pairs.size()) != params.K)
        throw InvalidInput("DP family has " + std::to_string(family.pairs.size()) + " rounds, expected K");

    const int subparts = params.served_per_interval();
    SubpartCounters q = init_counters(params);

    Schedule schedule{params, demand, {}};
    schedule.vectors.reserve(static_cast<std::size_t>(params.intervals()));

    int s = 0;
    for (const auto &pair : family.pairs) {
        for (int i = 1; i <= pair.rows(); ++i) {
            TransmissionVector x{++s, pair.round, i, {}};
            x.terms.reserve(static_cast<std::size_t>(pair.cols()));
            for (int j = 1; j <= pair.cols(); ++j) {
                const int usr = pair.user(i, j);
                const int prt = pair.part(i, j);
                const int file = demand.file_of(usr);
                const int ind = q.at(file, prt);
                if (ind > subparts)
                    throw SubpartOverflow("interval " + std::to_string(s) + ": subpart " + std::to_string(ind) +
                                          " of file " + std::to_string(file) + " part " + std::to_string(prt) +
                                          " exceeds t+L=" + std::to_string(subparts));
                x.terms.push_back({usr, file, prt, ind, generate_zf_set(pair, i, usr, prt, V)});
                q.increment(file, prt);
            }
            schedule.vectors.push_back(std::move(x));
        }
    }
    return schedule;
}

Schedule build_schedule(const SchemeParams &params, const Demand &demand)
{
    const auto V = build_placement_matrix(params);
    return build_schedule(params, V, generate_family(params), demand);
}

} // namespace cachecast
