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

#include <cstdint>
#include <vector>

namespace cachecast {

using BinaryMatrix = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic>;

/**
 * Binary P x K placement matrix. Rows are file part indices, columns are
 * users; entry (p, k) = 1 means every subpart of part p of every file sits
 * in the cache of user k.
 *
 * Public accessors are 1-based. Construction validates that every row sums
 * to t and every column to P t / K.
 */
class PlacementMatrix {
  public:
    PlacementMatrix(BinaryMatrix entries, int t);

    [[nodiscard]] int parts() const { return static_cast<int>(entries_.rows()); }
    [[nodiscard]] int users() const { return static_cast<int>(entries_.cols()); }
    [[nodiscard]] int gain() const { return t_; }

    /// True iff user caches part (both 1-based).
    [[nodiscard]] bool cached(int part, int user) const { return entries_(part - 1, user - 1) != 0; }

    /// Users caching part, ascending.
    [[nodiscard]] std::vector<int> users_caching(int part) const;

    /// Parts cached by user, ascending.
    [[nodiscard]] std::vector<int> parts_cached_by(int user) const;

    [[nodiscard]] const BinaryMatrix &entries() const { return entries_; }

    bool operator==(const PlacementMatrix &other) const
    {
        return t_ == other.t_ && entries_.rows() == other.entries_.rows() &&
               entries_.cols() == other.entries_.cols() && entries_ == other.entries_;
    }

  private:
    BinaryMatrix entries_;
    int t_;
};

/// Throws InvalidPlacement unless the P x K matrix is binary, P t / K is an
/// integer, rows sum to t and columns sum to P t / K.
void validate_placement_matrix(const BinaryMatrix &entries, int t);

/// The K x K circulant placement: row 1 holds ones in columns 1..t, every
/// further row is the previous one shifted right by one position.
PlacementMatrix build_placement_matrix(const SchemeParams &params);

/// Same, with an explicit part count. Only P = K can be generated.
PlacementMatrix build_placement_matrix(const SchemeParams &params, int parts);

struct CacheEntry {
    int file;
    int part;
    int subpart;

    auto operator<=>(const CacheEntry &) const = default;
};

/// Cache content Z(k) of one user: (file, part, subpart) for every file,
/// every cached part and every subpart 1..t+L.
class CacheContents {
  public:
    CacheContents(int user, int files, int subparts, std::vector<int> parts);

    [[nodiscard]] int user() const { return user_; }
    [[nodiscard]] const std::vector<int> &parts() const { return parts_; }

    [[nodiscard]] bool contains(int file, int part, int subpart) const;
    [[nodiscard]] bool contains(const CacheEntry &e) const { return contains(e.file, e.part, e.subpart); }

    [[nodiscard]] std::size_t size() const { return static_cast<std::size_t>(files_) * parts_.size() * subparts_; }

    /// All entries, sorted by (file, part, subpart).
    [[nodiscard]] std::vector<CacheEntry> entries() const;

    /// Cached share of a single file, |parts| / K.
    [[nodiscard]] double file_fraction(int total_parts) const
    {
        return static_cast<double>(parts_.size()) / total_parts;
    }

  private:
    int user_;
    int files_;
    int subparts_;
    std::vector<int> parts_;
    std::vector<bool> part_mask_;
};

/// Throws UserOutOfRange when user is not in [1..K].
CacheContents cache_contents(const SchemeParams &params, const PlacementMatrix &V, int user);

} // namespace cachecast
