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

#include "cachecast/serialization.hpp"

#include "cachecast/errors.hpp"

#include <limits>
#include <sstream>

namespace cachecast {

namespace {

template <typename T>
T required(const Json &j, const char *key)
{
    if (!j.is_object() || !j.contains(key))
        throw InvalidInput(std::string("missing JSON field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception &e) {
        throw InvalidInput(std::string("bad JSON field '") + key + "': " + e.what());
    }
}

Json counterexample_json(const std::optional<Counterexample> &ce)
{
    if (!ce)
        return nullptr;
    return Json{{"interval", ce->interval},
                {"term", ce->term},
                {"user", ce->user},
                {"part", ce->part},
                {"detail", ce->detail}};
}

} // namespace

Json to_json(const SchemeParams &params)
{
    return Json{{"K", params.K}, {"L", params.L}, {"t", params.t}, {"N", params.N}};
}

SchemeParams params_from_json(const Json &j)
{
    return validate_params(required<int>(j, "K"), required<int>(j, "L"), required<int>(j, "t"),
                           required<int>(j, "N"));
}

Json to_json(const PlacementMatrix &V)
{
    Json rows = Json::array();
    for (int p = 1; p <= V.parts(); ++p) {
        Json row = Json::array();
        for (int k = 1; k <= V.users(); ++k)
            row.push_back(V.cached(p, k) ? 1 : 0);
        rows.push_back(std::move(row));
    }
    return Json{{"K", V.users()}, {"t", V.gain()}, {"indexing", "1-based"}, {"rows", std::move(rows)}};
}

PlacementMatrix placement_from_json(const Json &j)
{
    const int K = required<int>(j, "K");
    const int t = required<int>(j, "t");
    const auto rows = required<std::vector<std::vector<int>>>(j, "rows");
    if (rows.empty())
        throw InvalidPlacement("placement matrix has no rows");
    BinaryMatrix m(static_cast<Eigen::Index>(rows.size()), K);
    for (std::size_t p = 0; p < rows.size(); ++p) {
        if (static_cast<int>(rows[p].size()) != K)
            throw InvalidPlacement("row " + std::to_string(p + 1) + " does not have K entries");
        for (int k = 0; k < K; ++k) {
            const int v = rows[p][static_cast<std::size_t>(k)];
            if (v != 0 && v != 1)
                throw InvalidPlacement("placement matrix entries must be 0 or 1");
            m(static_cast<Eigen::Index>(p), k) = static_cast<std::uint8_t>(v);
        }
    }
    return PlacementMatrix(std::move(m), t);
}

std::string to_text(const PlacementMatrix &V)
{
    std::ostringstream os;
    for (int p = 1; p <= V.parts(); ++p) {
        for (int k = 1; k <= V.users(); ++k)
            os << (k > 1 ? " " : "") << (V.cached(p, k) ? 1 : 0);
        os << '\n';
    }
    return os.str();
}

Json to_json(const IndexMatrix &m)
{
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

IndexMatrix index_matrix_from_json(const Json &j)
{
    const auto rows = j.get<std::vector<std::vector<int>>>();
    const auto cols = rows.empty() ? std::size_t{0} : rows.front().size();
    IndexMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw InvalidInput("ragged matrix in JSON");
        for (std::size_t c = 0; c < cols; ++c)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = rows[i][c];
    }
    return m;
}

Json to_json(const DPFamily &family)
{
    Json out = Json::array();
    for (const auto &pair : family.pairs)
        out.push_back(Json{{"round", pair.round}, {"R", to_json(pair.parts)}, {"C", to_json(pair.users)}});
    return out;
}

Json to_json(const TransmissionTerm &term)
{
    return Json{{"user", term.user},
                {"file", term.file},
                {"part", term.part},
                {"subpart", term.subpart},
                {"zf_set", term.zf_set}};
}

Json to_json(const TransmissionVector &x)
{
    Json terms = Json::array();
    for (const auto &term : x.terms)
        terms.push_back(to_json(term));
    return Json{{"s", x.s}, {"round", x.round}, {"row", x.row}, {"terms", std::move(terms)}};
}

Json to_json(const Schedule &schedule)
{
    Json vectors = Json::array();
    for (const auto &x : schedule.vectors)
        vectors.push_back(to_json(x));
    return Json{{"params", to_json(schedule.params)},
                {"demand", schedule.demand.files()},
                {"vectors", std::move(vectors)}};
}

Schedule schedule_from_json(const Json &j)
{
    if (!j.is_object())
        throw InvalidInput("schedule JSON must be an object");
    const auto params = params_from_json(j.at("params"));
    auto demand = Demand::from_files(required<std::vector<int>>(j, "demand"), params.N);
    if (demand.users() != params.K)
        throw InvalidInput("demand must list one file per user");

    Schedule schedule{params, std::move(demand), {}};
    const auto &vectors = j.at("vectors");
    if (!vectors.is_array())
        throw InvalidInput("'vectors' must be an array");
    for (const auto &v : vectors) {
        TransmissionVector x{required<int>(v, "s"), required<int>(v, "round"), required<int>(v, "row"), {}};
        const auto &terms = v.at("terms");
        if (!terms.is_array())
            throw InvalidInput("'terms' must be an array");
        for (const auto &t : terms)
            x.terms.push_back({required<int>(t, "user"), required<int>(t, "file"), required<int>(t, "part"),
                               required<int>(t, "subpart"), required<std::vector<int>>(t, "zf_set")});
        schedule.vectors.push_back(std::move(x));
    }
    return schedule;
}

std::string to_text(const Schedule &schedule)
{
    std::ostringstream os;
    for (const auto &x : schedule.vectors) {
        os << "x(" << x.s << ") =";
        for (std::size_t j = 0; j < x.terms.size(); ++j) {
            const auto &term = x.terms[j];
            os << (j == 0 ? " " : " + ") << 'W' << term.file << '_' << term.part << '^' << term.subpart << " v{";
            for (std::size_t r = 0; r < term.zf_set.size(); ++r)
                os << (r == 0 ? "" : ",") << term.zf_set[r];
            os << '}';
        }
        os << '\n';
    }
    return os.str();
}

Json to_json(const VerificationReport &report)
{
    Json checks = Json::array();
    for (const auto &c : report.checks)
        checks.push_back(
            Json{{"name", c.name}, {"passed", c.passed}, {"counterexample", counterexample_json(c.counterexample)}});

    Json counts = Json::array();
    for (const auto &[key, count] : report.per_part_appearance_counts)
        counts.push_back(Json{{"user", key.first}, {"part", key.second}, {"count", count}});

    return Json{{"params", to_json(report.params)},
                {"passed", report.passed()},
                {"intervals", report.dof_per_interval.size()},
                {"subpacketization", report.params.subpacketization()},
                {"checks", std::move(checks)},
                {"dof_per_interval", report.dof_per_interval},
                {"per_part_appearance_counts", std::move(counts)},
                {"summary", report.summary()}};
}

Json to_json(const SimulationSummary &summary)
{
    Json failures = Json::array();
    for (const auto &f : summary.failures)
        failures.push_back(Json{{"interval", f.interval}, {"user", f.user}, {"reason", f.reason}});
    Json success = Json::array();
    for (bool b : summary.interval_success)
        success.push_back(b);
    return Json{{"max_residual", summary.max_residual},
                {"max_orthogonality_error", summary.max_orthogonality_error},
                {"intervals", summary.intervals},
                {"served_per_interval", summary.served_per_interval},
                {"seed", summary.seed},
                {"noise_power", summary.noise_power},
                {"passed", summary.passed()},
                {"interval_success", success},
                {"failures", std::move(failures)}};
}

Json big_to_json(const BigInt &v)
{
    if (v >= 0 && v <= BigInt(std::numeric_limits<std::uint64_t>::max()))
        return Json(static_cast<std::uint64_t>(v));
    return Json(v.str());
}

Json to_json(const SchemeMetrics &m)
{
    Json out{{"scheme", to_string(m.scheme)}, {"K", m.K}, {"t", m.t}, {"L", m.L}};
    if (m.alpha)
        out["alpha"] = *m.alpha;
    if (m.beta)
        out["beta"] = *m.beta;
    if (denominator(m.subpacketization) == 1)
        out["subpacketization"] = big_to_json(numerator(m.subpacketization));
    else
        out["subpacketization"] = m.subpacketization.str();
    out["dof"] = m.dof;
    out["applicable"] = m.applicability.applicable;
    out["reason"] = m.applicability.reason;
    if (m.delivery_time)
        out["delivery_time"] = m.delivery_time->str();
    if (m.sum_rate)
        out["sum_rate"] = m.sum_rate->str();
    return out;
}

Json comparison_series_json(const std::vector<ComparisonRow> &rows)
{
    Json ms = Json::array();
    Json linear = Json::array();
    for (const auto &r : rows) {
        ms.push_back(Json::array({r.K, big_to_json(r.subpack_ms)}));
        linear.push_back(Json::array({r.K, big_to_json(r.subpack_new)}));
    }
    const int t = rows.empty() ? 0 : rows.front().t;
    const int L = rows.empty() ? 0 : rows.front().L;
    return Json{{"t", t},
                {"L", L},
                {"series",
                 Json::array({Json{{"name", "multi-server"}, {"points", std::move(ms)}},
                              Json{{"name", "new"}, {"points", std::move(linear)}}})}};
}

} // namespace cachecast
