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

#include "cachecast/verifier.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cachecast {

namespace {

CheckOutcome pass(std::string name)
{
    return CheckOutcome{std::move(name), true, std::nullopt};
}

CheckOutcome fail(std::string name, Counterexample where)
{
    return CheckOutcome{std::move(name), false, std::move(where)};
}

bool contains(const std::vector<int> &sorted_or_not, int value)
{
    return std::find(sorted_or_not.begin(), sorted_or_not.end(), value) != sorted_or_not.end();
}

std::string str(int v)
{
    return std::to_string(v);
}

} // namespace

DofCheck check_dof(const Schedule &schedule)
{
    const int target = schedule.params.served_per_interval();
    DofCheck result{pass("dof"), {}};
    result.served_per_interval.reserve(schedule.vectors.size());

    for (const auto &x : schedule.vectors) {
        std::set<int> users;
        int repeated = 0;
        for (const auto &term : x.terms)
            if (!users.insert(term.user).second && repeated == 0)
                repeated = term.user;
        const int served = static_cast<int>(users.size());
        result.served_per_interval.push_back(served);

        if (result.outcome.passed && (served != target || static_cast<int>(x.terms.size()) != target)) {
            std::string detail = "interval serves " + str(served) + " distinct users with " + str(int(x.terms.size())) +
                                 " terms, expected t+L=" + str(target);
            result.outcome = fail("dof", {x.s, 0, repeated, 0, std::move(detail)});
        }
    }
    return result;
}

CheckOutcome check_decodability(const Schedule &schedule, const PlacementMatrix &V)
{
    const std::string name = "decodability";
    const int zf_size = schedule.params.t + 1;

    for (const auto &x : schedule.vectors) {
        const auto targeted = x.targeted_users();
        for (std::size_t j = 0; j < x.terms.size(); ++j) {
            const auto &term = x.terms[j];
            const int idx = static_cast<int>(j) + 1;

            if (term.user < 1 || term.user > V.users() || term.part < 1 || term.part > V.parts())
                return fail(name, {x.s, idx, term.user, term.part, "user or part index out of range"});
            if (static_cast<int>(term.zf_set.size()) != zf_size ||
                std::set<int>(term.zf_set.begin(), term.zf_set.end()).size() != term.zf_set.size())
                return fail(name, {x.s, idx, term.user, term.part,
                                   "zero-forcing set must hold t+1=" + str(zf_size) + " distinct users"});
            if (!contains(term.zf_set, term.user))
                return fail(name, {x.s, idx, term.user, term.part,
                                   "term is nulled at its own receiver (user not in zero-forcing set)"});
            for (int u : term.zf_set)
                if (!contains(targeted, u))
                    return fail(name, {x.s, idx, u, term.part, "zero-forcing set member outside T(s)"});

            // The term reaches every u in its zero-forcing set; anyone there
            // other than the receiver has to cancel it from cache.
            for (int u : targeted) {
                if (u == term.user || !contains(term.zf_set, u))
                    continue;
                if (u < 1 || u > V.users() || !V.cached(term.part, u))
                    return fail(name, {x.s, idx, u, term.part,
                                       "interference from part " + str(term.part) + " reaches user " + str(u) +
                                           " which neither nulls nor caches it"});
            }
        }
    }
    return pass(name);
}

CoverageCheck check_coverage(const Schedule &schedule, const PlacementMatrix &V)
{
    const auto &params = schedule.params;
    const int subparts = params.served_per_interval();
    CoverageCheck result{pass("coverage"), {}};

    auto record = [&](Counterexample where) {
        if (result.outcome.passed)
            result.outcome = fail("coverage", std::move(where));
    };

    for (const auto &x : schedule.vectors) {
        for (std::size_t j = 0; j < x.terms.size(); ++j) {
            const auto &term = x.terms[j];
            const int idx = static_cast<int>(j) + 1;
            if (term.user < 1 || term.user > params.K || term.part < 1 || term.part > params.K) {
                record({x.s, idx, term.user, term.part, "user or part index out of range"});
                continue;
            }
            int &count = result.appearances[{term.user, term.part}];
            ++count;
            if (V.cached(term.part, term.user))
                record({x.s, idx, term.user, term.part, "delivers a part the user already caches"});
            else if (term.subpart != count)
                record({x.s, idx, term.user, term.part,
                        "subpart " + str(term.subpart) + " delivered where " + str(count) + " was due"});
        }
    }

    for (int k = 1; k <= params.K; ++k) {
        for (int p = 1; p <= params.K; ++p) {
            if (V.cached(p, k))
                continue;
            const auto it = result.appearances.find({k, p});
            const int seen = it == result.appearances.end() ? 0 : it->second;
            if (seen != subparts)
                record({0, 0, k, p,
                        "missing part delivered " + str(seen) + " times, expected t+L=" + str(subparts)});
        }
    }
    return result;
}

CheckOutcome check_round_tallies(const Schedule &schedule, const PlacementMatrix &V)
{
    const std::string name = "round_tallies";
    const auto &params = schedule.params;
    const int K = params.K;

    std::map<int, AppearanceCounts> per_round;
    for (const auto &x : schedule.vectors)
        for (const auto &term : x.terms)
            ++per_round[x.round][{term.user, term.part}];

    for (int r = 1; r <= K; ++r) {
        const auto &tally = per_round[r];
        auto count = [&](int k, int p) {
            const auto it = tally.find({k, p});
            return it == tally.end() ? 0 : it->second;
        };
        for (int k = 1; k <= K; ++k) {
            for (int p = 1; p <= K; ++p) {
                int expected = 0;
                if (!V.cached(r, k))
                    expected = (p == r) ? params.L : 0;
                else
                    expected = V.cached(p, k) ? 0 : 1;
                if (count(k, p) != expected)
                    return fail(name, {0, 0, k, p,
                                       "round " + str(r) + " delivers part " + str(p) + " to user " + str(k) + " " +
                                           str(count(k, p)) + " times, expected " + str(expected)});
            }
        }
    }
    return pass(name);
}

CheckOutcome check_diagonal_shift(const Schedule &schedule)
{
    const std::string name = "diagonal_shift";
    const auto &params = schedule.params;
    const int K = params.K;
    const auto step = static_cast<std::size_t>(params.intervals_per_round());
    const auto &vs = schedule.vectors;

    for (std::size_t a = 0; a + step < vs.size(); ++a) {
        const auto &base = vs[a];
        const auto &shifted = vs[a + step];
        if (base.terms.size() != shifted.terms.size())
            return fail(name, {shifted.s, 0, 0, 0, "term count differs from interval " + str(base.s)});
        for (std::size_t j = 0; j < base.terms.size(); ++j) {
            const auto &b = base.terms[j];
            const auto &s = shifted.terms[j];
            const int idx = static_cast<int>(j) + 1;
            if (b.user < 1 || b.user > K || b.part < 1 || b.part > K)
                return fail(name, {base.s, idx, b.user, b.part, "index out of range"});
            std::vector<int> zf;
            for (int u : b.zf_set) {
                if (u < 1 || u > K)
                    return fail(name, {base.s, idx, u, b.part, "zero-forcing member out of range"});
                zf.push_back(circular_increment(u, K));
            }
            std::sort(zf.begin(), zf.end());
            auto actual = s.zf_set;
            std::sort(actual.begin(), actual.end());
            const int user = circular_increment(b.user, K);
            if (s.user != user || s.part != circular_increment(b.part, K) ||
                s.file != schedule.demand.file_of(user) || actual != zf)
                return fail(name, {shifted.s, idx, s.user, s.part,
                                   "term is not the diagonal shift of interval " + str(base.s) + " term " + str(idx)});
        }
    }
    return pass(name);
}

CheckOutcome check_term_invariants(const Schedule &schedule, const PlacementMatrix &V)
{
    const std::string name = "term_invariants";
    const auto &params = schedule.params;
    const int K = params.K;

    if (static_cast<int>(schedule.vectors.size()) != params.intervals())
        return fail(name, {0, 0, 0, 0,
                           "schedule has " + str(int(schedule.vectors.size())) + " intervals, expected K(K-t)=" +
                               str(params.intervals())});

    for (std::size_t v = 0; v < schedule.vectors.size(); ++v) {
        const auto &x = schedule.vectors[v];
        if (x.s != static_cast<int>(v) + 1)
            return fail(name, {x.s, 0, 0, 0, "interval index out of sequence"});
        const auto targeted = x.targeted_users();
        for (std::size_t j = 0; j < x.terms.size(); ++j) {
            const auto &term = x.terms[j];
            const int idx = static_cast<int>(j) + 1;
            if (term.user < 1 || term.user > K || term.part < 1 || term.part > K)
                return fail(name, {x.s, idx, term.user, term.part, "user or part index out of range"});
            if (term.file != schedule.demand.file_of(term.user))
                return fail(name, {x.s, idx, term.user, term.part, "file does not match the user's demand"});
            if (term.subpart < 1 || term.subpart > params.served_per_interval())
                return fail(name, {x.s, idx, term.user, term.part, "subpart outside [1..t+L]"});
            if (V.cached(term.part, term.user))
                return fail(name, {x.s, idx, term.user, term.part, "intended user caches the part"});
            if (static_cast<int>(term.zf_set.size()) != params.t + 1 || !contains(term.zf_set, term.user))
                return fail(name, {x.s, idx, term.user, term.part, "zero-forcing set malformed"});
            for (int u : term.zf_set) {
                if (!contains(targeted, u))
                    return fail(name, {x.s, idx, u, term.part, "zero-forcing set not within T(s)"});
                if (u != term.user && (u < 1 || u > K || !V.cached(term.part, u)))
                    return fail(name, {x.s, idx, u, term.part, "zero-forcing member does not cache the part"});
            }
        }
    }
    return pass(name);
}

CheckOutcome check_dp_family(const DPFamily &family, const PlacementMatrix &V)
{
    const std::string name = "dp_family";
    const auto &params = family.params;
    const int K = params.K;

    if (static_cast<int>(family.pairs.size()) != K)
        return fail(name, {0, 0, 0, 0, "family must hold K rounds"});

    for (std::size_t k = 0; k < family.pairs.size(); ++k) {
        const auto &pair = family.pairs[k];
        if (pair.round != static_cast<int>(k) + 1 || pair.rows() != K - params.t ||
            pair.cols() != params.served_per_interval() || pair.users.rows() != pair.parts.rows() ||
            pair.users.cols() != pair.parts.cols())
            return fail(name, {0, 0, 0, 0, "round " + str(int(k) + 1) + " has wrong shape or numbering"});
        if ((pair.parts.array() < 1).any() || (pair.parts.array() > K).any() || (pair.users.array() < 1).any() ||
            (pair.users.array() > K).any())
            return fail(name, {0, 0, 0, 0, "round " + str(pair.round) + " has entries outside [1..K]"});
        for (int i = 1; i <= pair.rows(); ++i) {
            const auto users = pair.row_users(i);
            if (std::set<int>(users.begin(), users.end()).size() != users.size())
                return fail(name, {0, 0, 0, 0, "round " + str(pair.round) + " row " + str(i) + " repeats a user"});
            for (int j = 1; j <= pair.cols(); ++j)
                if (V.cached(pair.part(i, j), pair.user(i, j)))
                    return fail(name, {0, j, pair.user(i, j), pair.part(i, j),
                                       "round " + str(pair.round) + " row " + str(i) +
                                           " schedules a part its user caches"});
        }
        if (k > 0 && !(pair == next_round(family.pairs[k - 1], K)))
            return fail(name, {0, 0, 0, 0, "round " + str(pair.round) + " is not the increment of the previous"});
    }
    return pass(name);
}

bool VerificationReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckOutcome &c) { return c.passed; });
}

const CheckOutcome *VerificationReport::find(const std::string &name) const
{
    for (const auto &c : checks)
        if (c.name == name)
            return &c;
    return nullptr;
}

std::string VerificationReport::summary() const
{
    std::ostringstream os;
    os << "scheme " << params << ": " << dof_per_interval.size() << " intervals, subpacketization "
       << params.subpacketization() << "\n";
    const bool dof_ok = !dof_per_interval.empty() &&
                        std::all_of(dof_per_interval.begin(), dof_per_interval.end(),
                                    [&](int d) { return d == params.served_per_interval(); });
    if (dof_ok)
        os << "DoF " << params.served_per_interval() << " in every interval\n";
    for (const auto &c : checks) {
        os << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.name;
        if (c.counterexample) {
            const auto &ce = *c.counterexample;
            os << " at interval " << ce.interval << ", term " << ce.term << ", user " << ce.user << ", part "
               << ce.part << ": " << ce.detail;
        }
        os << "\n";
    }
    os << (passed() ? "all checks passed" : "verification FAILED") << "\n";
    return os.str();
}

VerificationReport verify_schedule(const Schedule &schedule, const PlacementMatrix &V)
{
    VerificationReport report{schedule.params, {}, {}, {}};
    auto dof = check_dof(schedule);
    auto coverage = check_coverage(schedule, V);

    report.checks.push_back(check_term_invariants(schedule, V));
    report.checks.push_back(dof.outcome);
    report.checks.push_back(check_decodability(schedule, V));
    report.checks.push_back(coverage.outcome);
    report.checks.push_back(check_round_tallies(schedule, V));
    report.checks.push_back(check_diagonal_shift(schedule));

    report.dof_per_interval = std::move(dof.served_per_interval);
    report.per_part_appearance_counts = std::move(coverage.appearances);
    return report;
}

VerificationReport verify_all(const SchemeParams &params, const Demand &demand)
{
    const auto V = build_placement_matrix(params);
    const auto family = generate_family(params);
    const auto schedule = build_schedule(params, V, family, demand);

    auto report = verify_schedule(schedule, V);
    report.checks.insert(report.checks.begin(), check_dp_family(family, V));
    return report;
}

} // namespace cachecast
