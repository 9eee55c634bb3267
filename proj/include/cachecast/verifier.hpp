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

#include "cachecast/delivery.hpp"
#include "cachecast/dp_matrices.hpp"
#include "cachecast/placement.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cachecast {

/// Where a check failed. interval/term are 1-based; 0 means the failure is
/// not tied to a particular interval or term (e.g. a triple that is never
/// delivered).
struct Counterexample {
    int interval = 0;
    int term = 0;
    int user = 0;
    int part = 0;
    std::string detail;

    bool operator==(const Counterexample &) const = default;
};

struct CheckOutcome {
    std::string name;
    bool passed = true;
    std::optional<Counterexample> counterexample;
};

/// (user, part) -> number of terms delivering a subpart of it.
using AppearanceCounts = std::map<std::pair<int, int>, int>;

struct DofCheck {
    CheckOutcome outcome;
    std::vector<int> served_per_interval;
};

struct CoverageCheck {
    CheckOutcome outcome;
    AppearanceCounts appearances;
};

/// Distinct intended receivers per interval; passes iff every interval has
/// exactly t + L terms for t + L distinct users.
DofCheck check_dof(const Schedule &schedule);

/// Every served user must see each foreign term either nulled (user not in
/// its zero-forcing set) or cached, and its own term not nulled. Zero-forcing
/// sets must have t + 1 members, contain the intended user and lie in T(s).
CheckOutcome check_decodability(const Schedule &schedule, const PlacementMatrix &V);

/// Delivered (user, part, subpart) triples must be exactly the missing
/// ones, each once, with subparts of a (user, part) pair arriving in order.
CoverageCheck check_coverage(const Schedule &schedule, const PlacementMatrix &V);

/// Within round r, users missing part r receive it L times and nothing else;
/// users caching part r receive each of their missing parts exactly once.
CheckOutcome check_round_tallies(const Schedule &schedule, const PlacementMatrix &V);

/// Interval s + (K - t) equals interval s with users, parts and zero-forcing
/// sets circularly incremented and files re-read from the demand.
CheckOutcome check_diagonal_shift(const Schedule &schedule);

/// Structural invariants of every term and of the schedule length.
CheckOutcome check_term_invariants(const Schedule &schedule, const PlacementMatrix &V);

/// Entry ranges, distinct row users, V[R, C] = 0 and the round-to-round
/// increment relation.
CheckOutcome check_dp_family(const DPFamily &family, const PlacementMatrix &V);

struct VerificationReport {
    SchemeParams params;
    std::vector<CheckOutcome> checks;
    std::vector<int> dof_per_interval;
    AppearanceCounts per_part_appearance_counts;

    [[nodiscard]] bool passed() const;
    [[nodiscard]] const CheckOutcome *find(const std::string &name) const;
    [[nodiscard]] std::string summary() const;
};

/// Runs every schedule-level check against a given placement.
VerificationReport verify_schedule(const Schedule &schedule, const PlacementMatrix &V);

/// Builds placement, DP family and schedule and checks all of them.
VerificationReport verify_all(const SchemeParams &params, const Demand &demand);

} // namespace cachecast
