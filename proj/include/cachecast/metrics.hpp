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

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace cachecast {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact C(n, k); zero when k < 0 or k > n.
BigInt binomial(int n, int k);

/// Exact n!.
BigInt factorial(int n);

enum class SchemeId { linear, multi_server, alpha_beta, antenna_grouping };

std::string to_string(SchemeId id);

struct Applicability {
    bool applicable = true;
    std::string reason;
};

/**
 * Closed-form figures of one scheme at (K, t, L).
 *
 * `subpacketization` is exact. It is an integer for every applicable
 * configuration except possibly the alpha/beta formula, whose leading factor
 * is kept rational so the formula can be evaluated as written.
 */
struct SchemeMetrics {
    SchemeId scheme = SchemeId::linear;
    int K = 0;
    int t = 0;
    int L = 0;
    std::optional<int> alpha;
    std::optional<int> beta;
    BigRational subpacketization = 0;
    int dof = 0;
    Applicability applicability;
    // Worst-case delivery time T* (normalized file units) and sum rate R*;
    // only filled for the linear scheme.
    std::optional<BigRational> delivery_time;
    std::optional<BigRational> sum_rate;

    /// Integer subpacketization; throws if the value is not integral.
    [[nodiscard]] BigInt subpacketization_int() const;
};

/// Sum rate K (1 - t/K) / T*.
BigRational sum_rate(int K, int t, const BigRational &delivery_time);

/// This scheme: subpacketization K (t + L), DoF t + L, T* = (K - t)/(t + L).
/// Throws InfeasibleParams when t < 1, t > L or t + L > K.
SchemeMetrics metrics_new(int K, int t, int L);

/// Multi-server baseline, C(K, t) C(K - t - 1, L - 1). Needs K > t and
/// L >= 1 (InapplicableParams otherwise); flagged inapplicable when
/// K - t < L.
SchemeMetrics metrics_multiserver(int K, int t, int L);

/// Alpha/beta beamformer-complexity scheme:
///   (alpha-1)! / ((delta-1)! (beta-1)! ((t+beta)!)^(delta-1)) * multi-server,
/// with delta = (t + alpha)/(t + beta). InapplicableParams unless delta is a
/// positive integer.
SchemeMetrics metrics_alpha_beta(int K, int t, int L, int alpha, int beta);

/// Antenna grouping: C(K/L, t/L), applicable iff L divides both K and t.
SchemeMetrics metrics_antenna_grouping(int K, int t, int L);

struct ComparisonRow {
    int K = 0;
    int t = 0;
    int L = 0;
    BigInt subpack_new;
    BigInt subpack_ms;
    BigRational ratio; // multi-server / new
};

std::vector<ComparisonRow> comparison_table(int t, int L, const std::vector<int> &users);

/// Decimal rendering with a fixed number of fractional digits, rounding
/// half away from zero. Exact: no floating point involved.
std::string format_decimal(const BigRational &value, int digits);

/// CSV with header K,t,L,subpack_new,subpack_ms,ratio.
std::string comparison_csv(const std::vector<ComparisonRow> &rows);

} // namespace cachecast
