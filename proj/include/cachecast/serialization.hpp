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

#include "cachecast/channel_sim.hpp"
#include "cachecast/delivery.hpp"
#include "cachecast/dp_matrices.hpp"
#include "cachecast/metrics.hpp"
#include "cachecast/placement.hpp"
#include "cachecast/verifier.hpp"

#include <json.hpp>

#include <string>
#include <vector>

// JSON and text forms of every artifact the library produces. All indices
// in these formats are 1-based. Keys keep insertion order so identical
// inputs serialize to identical bytes.
namespace cachecast {

using Json = nlohmann::ordered_json;

Json to_json(const SchemeParams &params);
SchemeParams params_from_json(const Json &j);

/// {"K":…, "t":…, "indexing":"1-based", "rows":[[0/1,…],…]}
Json to_json(const PlacementMatrix &V);
PlacementMatrix placement_from_json(const Json &j);

/// One 0/1 row per line, entries separated by single spaces.
std::string to_text(const PlacementMatrix &V);

/// [{"round":k, "R":[[…]], "C":[[…]]}, …]
Json to_json(const DPFamily &family);

Json to_json(const IndexMatrix &m);
IndexMatrix index_matrix_from_json(const Json &j);

Json to_json(const TransmissionTerm &term);
Json to_json(const TransmissionVector &x);

/// {"params":{…}, "demand":[…], "vectors":[{"s","round","row","terms":[…]}]}
Json to_json(const Schedule &schedule);
Schedule schedule_from_json(const Json &j);

/// Human-readable listing, one interval per line, e.g.
/// "x(1) = W1_3^1 v{1,3,4} + …".
std::string to_text(const Schedule &schedule);

Json to_json(const VerificationReport &report);

/// {"max_residual", "intervals", "served_per_interval", "seed", "noise_power", …}
Json to_json(const SimulationSummary &summary);

Json to_json(const SchemeMetrics &m);

/// Two series (multi-server and new) of [K, subpacketization] points.
Json comparison_series_json(const std::vector<ComparisonRow> &rows);

/// Exact integer as a JSON number when it fits in 64 bits, else a string.
Json big_to_json(const BigInt &v);

} // namespace cachecast
