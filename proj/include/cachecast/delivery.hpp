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

#include "cachecast/dp_matrices.hpp"
#include "cachecast/params.hpp"
#include "cachecast/placement.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <vector>

namespace cachecast {

/// User -> requested file map W(k), both 1-based.
class Demand {
  public:
    /// W(k) = k.
    static Demand identity(int users);

    /// Validates totality and range; repeated files are accepted here and
    /// rejected by build_schedule().
    static Demand from_files(std::vector<int> files, int library_size);

    [[nodiscard]] int users() const { return static_cast<int>(files_.size()); }
    [[nodiscard]] int file_of(int user) const { return files_.at(static_cast<std::size_t>(user - 1)); }
    [[nodiscard]] const std::vector<int> &files() const { return files_; }
    [[nodiscard]] bool injective() const;

    bool operator==(const Demand &) const = default;

  private:
    explicit Demand(std::vector<int> files) : files_(std::move(files)) {}
    std::vector<int> files_;
};

/// Next subpart index q(n, p) to send for part p of file n.
class SubpartCounters {
  public:
    SubpartCounters(int files, int parts) : q_(Eigen::MatrixXi::Ones(files, parts)) {}

    [[nodiscard]] int files() const { return static_cast<int>(q_.rows()); }
    [[nodiscard]] int parts() const { return static_cast<int>(q_.cols()); }
    [[nodiscard]] int at(int file, int part) const { return q_(file - 1, part - 1); }
    void increment(int file, int part) { ++q_(file - 1, part - 1); }
    [[nodiscard]] const Eigen::MatrixXi &table() const { return q_; }

  private:
    Eigen::MatrixXi q_;
};

/// N x K table of ones.
SubpartCounters init_counters(const SchemeParams &params);

/// Zero-forcing set of one term: the intended user plus every user of the
/// same C_k row that caches the part. Sorted ascending. Throws
/// ZfSetSizeViolation unless it has exactly t + 1 members.
std::vector<int> generate_zf_set(const DPMatrixPair &pair, int row, int user, int part, const PlacementMatrix &V);

struct TransmissionTerm {
    int user = 0;
    int file = 0;
    int part = 0;
    int subpart = 0;
    std::vector<int> zf_set;

    bool operator==(const TransmissionTerm &) const = default;
};

/// Abstract identifier of the unit-power symbol carrying W_part^subpart of
/// a file. Unique per (file, part, subpart) for the given parameters.
std::int64_t symbol_id(const SchemeParams &params, int file, int part, int subpart);

struct TransmissionVector {
    int s = 0;
    int round = 0;
    int row = 0;
    std::vector<TransmissionTerm> terms;

    /// T(s) in term order.
    [[nodiscard]] std::vector<int> targeted_users() const;

    bool operator==(const TransmissionVector &) const = default;
};

struct Schedule {
    SchemeParams params;
    Demand demand;
    std::vector<TransmissionVector> vectors;

    bool operator==(const Schedule &) const = default;
};

/// Builds all K (K - t) transmission vectors: rounds outer, DP rows inner,
/// terms in column order. Throws DuplicateDemand for non-injective demands
/// and SubpartOverflow if a counter would pass t + L.
Schedule build_schedule(const SchemeParams &params, const PlacementMatrix &V, const DPFamily &family,
                        const Demand &demand);

/// Placement, DP family and schedule in one call.
Schedule build_schedule(const SchemeParams &params, const Demand &demand);

} // namespace cachecast
