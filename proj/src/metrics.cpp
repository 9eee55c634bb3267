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

#include "cachecast/metrics.hpp"

#include "cachecast/errors.hpp"

#include <sstream>

namespace cachecast {

namespace mp = boost::multiprecision;

BigInt binomial(int n, int k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    BigInt result = 1;
    // Each prefix product C(n-k+i, i) is an integer, so the division is exact.
    for (int i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

BigInt factorial(int n)
{
    if (n < 0)
        throw InvalidInput("factorial of negative number");
    BigInt result = 1;
    for (int i = 2; i <= n; ++i)
        result *= i;
    return result;
}

std::string to_string(SchemeId id)
{
    switch (id) {
    case SchemeId::linear:
        return "new";
    case SchemeId::multi_server:
        return "multi-server";
    case SchemeId::alpha_beta:
        return "alpha-beta";
    case SchemeId::antenna_grouping:
        return "antenna-grouping";
    }
    return "unknown";
}

BigInt SchemeMetrics::subpacketization_int() const
{
    if (denominator(subpacketization) != 1)
        throw InvalidInput("subpacketization " + subpacketization.str() + " is not an integer");
    return numerator(subpacketization);
}

BigRational sum_rate(int K, int t, const BigRational &delivery_time)
{
    // K (1 - t/K) = K - t
    return BigRational(K - t) / delivery_time;
}

SchemeMetrics metrics_new(int K, int t, int L)
{
    if (t < 1 || t > L || t + L > K)
        throw InfeasibleParams("linear scheme needs 1 <= t <= L and t + L <= K (K=" + std::to_string(K) +
                               ", t=" + std::to_string(t) + ", L=" + std::to_string(L) + ")");
    SchemeMetrics m;
    m.scheme = SchemeId::linear;
    m.K = K;
    m.t = t;
    m.L = L;
    m.subpacketization = BigRational(K) * (t + L);
    m.dof = t + L;
    // K (K - t) intervals, each 1 / (K (t + L)) of a file long.
    m.delivery_time = BigRational(K * (K - t), K * (t + L));
    m.sum_rate = sum_rate(K, t, *m.delivery_time);
    return m;
}

SchemeMetrics metrics_multiserver(int K, int t, int L)
{
    if (t < 0 || K <= t || L < 1)
        throw InapplicableParams("multi-server formula needs K > t and L >= 1");
    SchemeMetrics m;
    m.scheme = SchemeId::multi_server;
    m.K = K;
    m.t = t;
    m.L = L;
    m.subpacketization = BigRational(binomial(K, t) * binomial(K - t - 1, L - 1));
    m.dof = t + L;
    if (K - t < L)
        m.applicability = {false, "needs K - t >= L for C(K-t-1, L-1) to be non-zero"};
    return m;
}

SchemeMetrics metrics_alpha_beta(int K, int t, int L, int alpha, int beta)
{
    if (alpha < 1 || beta < 1)
        throw InapplicableParams("alpha and beta must be positive");
    if ((t + alpha) % (t + beta) != 0)
        throw InapplicableParams("delta = (t+alpha)/(t+beta) = " + std::to_string(t + alpha) + "/" +
                                 std::to_string(t + beta) + " is not an integer");
    const int delta = (t + alpha) / (t + beta);

    SchemeMetrics m = metrics_multiserver(K, t, L);
    m.scheme = SchemeId::alpha_beta;
    m.alpha = alpha;
    m.beta = beta;
    const BigInt denom = factorial(delta - 1) * factorial(beta - 1) * mp::pow(factorial(t + beta), delta - 1);
    m.subpacketization *= BigRational(factorial(alpha - 1), denom);
    m.dof = t + alpha;
    return m;
}

SchemeMetrics metrics_antenna_grouping(int K, int t, int L)
{
    SchemeMetrics m;
    m.scheme = SchemeId::antenna_grouping;
    m.K = K;
    m.t = t;
    m.L = L;
    m.dof = t + L;
    if (L < 1 || K % L != 0 || t % L != 0) {
        m.applicability = {false, "K/L and t/L must both be integers; otherwise antenna grouping loses DoF"};
        m.subpacketization = 0;
        return m;
    }
    m.subpacketization = BigRational(binomial(K / L, t / L));
    m.applicability = {true, "K/L and t/L are integers; no DoF loss"};
    return m;
}

std::vector<ComparisonRow> comparison_table(int t, int L, const std::vector<int> &users)
{
    std::vector<ComparisonRow> rows;
    rows.reserve(users.size());
    for (int K : users) {
        const auto linear = metrics_new(K, t, L).subpacketization_int();
        const auto ms = metrics_multiserver(K, t, L).subpacketization_int();
        rows.push_back({K, t, L, linear, ms, BigRational(ms, linear)});
    }
    return rows;
}

std::string format_decimal(const BigRational &value, int digits)
{
    const BigInt scale = mp::pow(BigInt(10), digits);
    const BigRational scaled = value * scale;
    BigInt num = numerator(scaled);
    const BigInt den = denominator(scaled);
    const bool negative = num < 0;
    if (negative)
        num = -num;
    BigInt rounded = (2 * num + den) / (2 * den);

    const BigInt whole = rounded / scale;
    const BigInt frac = rounded % scale;
    std::string out = (negative && rounded != 0 ? "-" : "") + whole.str();
    if (digits > 0) {
        std::string f = frac.str();
        out += "." + std::string(static_cast<std::size_t>(digits) - f.size(), '0') + f;
    }
    return out;
}

std::string comparison_csv(const std::vector<ComparisonRow> &rows)
{
    std::ostringstream os;
    os << "K,t,L,subpack_new,subpack_ms,ratio\n";
    for (const auto &r : rows)
        os << r.K << ',' << r.t << ',' << r.L << ',' << r.subpack_new << ',' << r.subpack_ms << ','
           << format_decimal(r.ratio, 1) << '\n';
    return os.str();
}

} // namespace cachecast
