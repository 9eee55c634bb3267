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
#include "cachecast/errors.hpp"
#include "cachecast/placement.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace cachecast {

template <typename Scalar>
using Complex = std::complex<Scalar>;

template <typename Scalar>
using ComplexMatrix = Eigen::Matrix<Complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using ComplexVector = Eigen::Matrix<Complex<Scalar>, Eigen::Dynamic, 1>;

/// K x L channel matrix; row k - 1 holds h_k^T.
template <typename Scalar>
struct ChannelRealization {
    ComplexMatrix<Scalar> h;
    std::uint64_t seed = 0;

    [[nodiscard]] int users() const { return static_cast<int>(h.rows()); }
    [[nodiscard]] int antennas() const { return static_cast<int>(h.cols()); }

    /// h_user^T v (plain transpose, no conjugation).
    [[nodiscard]] Complex<Scalar> gain(int user, const ComplexVector<Scalar> &v) const
    {
        return (h.row(user - 1) * v)(0);
    }
};

template <typename Scalar>
struct Beamformer {
    std::vector<int> zf_set;
    int intended_user = 0;
    ComplexVector<Scalar> v;
};

struct SimulationConfig {
    std::uint64_t seed = 0;
    double noise_power = 0.0; // 0 = noiseless
    double symbol_power = 1.0;
    double residual_tolerance = 1e-9;
    double orthogonality_tolerance = 1e-10;
};

/// i.i.d. CN(0, 1) entries, drawn row by row from a seeded mt19937_64.
template <typename Scalar = double>
ChannelRealization<Scalar> sample_channels(int K, int L, std::uint64_t seed)
{
    if (K < 1 || L < 1)
        throw InvalidInput("channel dimensions must be positive");
    std::mt19937_64 rng(seed);
    std::normal_distribution<Scalar> component(Scalar(0), std::sqrt(Scalar(0.5)));
    ChannelRealization<Scalar> ch{ComplexMatrix<Scalar>(K, L), seed};
    for (int k = 0; k < K; ++k)
        for (int l = 0; l < L; ++l) {
            const Scalar re = component(rng);
            const Scalar im = component(rng);
            ch.h(k, l) = Complex<Scalar>(re, im);
        }
    return ch;
}

/// Deterministic unit-modulus symbol for W_part^subpart of a file.
template <typename Scalar = double>
Complex<Scalar> unit_symbol(int file, int part, int subpart, std::uint64_t seed)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(file), static_cast<std::uint32_t>(part),
                      static_cast<std::uint32_t>(subpart)};
    std::mt19937_64 rng(seq);
    // 53 random bits mapped to [0, 1); independent of the library's
    // distribution implementations.
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const double phase = 2.0 * std::numbers::pi * u;
    return Complex<Scalar>(static_cast<Scalar>(std::cos(phase)), static_cast<Scalar>(std::sin(phase)));
}

/**
 * Zero-forcing beamformer for one term.
 *
 * The intended user's matched direction conj(h_user) is projected onto the
 * orthogonal complement of span{conj(h_u) : u in T(s) \ R}, which is exactly
 * the set of v with h_u^T v = 0 for those u, and normalized to unit length.
 * The basis of the nulled span comes from a Householder QR; the projection
 * is applied twice to clean up rounding.
 */
template <typename Scalar>
Beamformer<Scalar> compute_beamformer(const ChannelRealization<Scalar> &channels, std::span<const int> targeted,
                                      std::span<const int> zf_set, int intended_user)
{
    const int L = channels.antennas();
    const auto in = [](std::span<const int> set, int u) { return std::find(set.begin(), set.end(), u) != set.end(); };

    for (int u : zf_set)
        if (!in(targeted, u))
            throw InvalidInput("zero-forcing set member " + std::to_string(u) + " is not a targeted user");
    if (!in(zf_set, intended_user))
        throw InvalidInput("intended user " + std::to_string(intended_user) + " missing from zero-forcing set");

    std::vector<int> nulled;
    for (int u : targeted)
        if (!in(zf_set, u))
            nulled.push_back(u);
    if (static_cast<int>(nulled.size()) >= L)
        throw InvalidInput("cannot null " + std::to_string(nulled.size()) + " users with " + std::to_string(L) +
                           " antennas");

    ComplexVector<Scalar> g = channels.h.row(intended_user - 1).adjoint();
    if (!nulled.empty()) {
        const auto m = static_cast<Eigen::Index>(nulled.size());
        ComplexMatrix<Scalar> A(L, m);
        for (Eigen::Index j = 0; j < m; ++j)
            A.col(j) = channels.h.row(nulled[static_cast<std::size_t>(j)] - 1).adjoint();
        Eigen::HouseholderQR<ComplexMatrix<Scalar>> qr(A);
        const ComplexMatrix<Scalar> Q = qr.householderQ() * ComplexMatrix<Scalar>::Identity(L, m);
        for (int pass = 0; pass < 2; ++pass)
            g -= Q * (Q.adjoint() * g);
    }

    const Scalar norm = g.norm();
    if (!(norm >= Scalar(1e-9)))
        throw DegenerateChannel("projection of user " + std::to_string(intended_user) +
                                "'s channel onto the nulling complement vanishes");
    return Beamformer<Scalar>{{zf_set.begin(), zf_set.end()}, intended_user, g / norm};
}

/// Everything one interval puts on the air, as seen by all K users.
template <typename Scalar>
struct IntervalSignal {
    int s = 0;
    std::vector<Beamformer<Scalar>> beamformers; // per term
    std::vector<Complex<Scalar>> symbols;        // per term, scaled by sqrt(symbol_power)
    ComplexMatrix<Scalar> equivalent;            // K x terms, h_u^T v_j
    ComplexVector<Scalar> received;              // K, y_u
    Scalar max_orthogonality_error = 0;          // max |h_u^T v| over u in T(s) \ R
    Scalar min_zf_gain = 0;                      // min |h_u^T v| over u in R
};

/// y_u = sum_j symbol_j h_u^T v_j + w_u for every user. `noise` is either
/// empty (noiseless) or holds K samples.
template <typename Scalar>
IntervalSignal<Scalar> simulate_interval(const ChannelRealization<Scalar> &channels, const TransmissionVector &x,
                                         const SimulationConfig &config,
                                         std::span<const Complex<Scalar>> noise = {})
{
    const int K = channels.users();
    const auto n_terms = static_cast<Eigen::Index>(x.terms.size());
    const auto targeted = x.targeted_users();
    const Scalar amplitude = static_cast<Scalar>(std::sqrt(config.symbol_power));

    IntervalSignal<Scalar> sig;
    sig.s = x.s;
    sig.equivalent.resize(K, n_terms);
    sig.min_zf_gain = std::numeric_limits<Scalar>::infinity();

    for (Eigen::Index j = 0; j < n_terms; ++j) {
        const auto &term = x.terms[static_cast<std::size_t>(j)];
        auto bf = compute_beamformer(channels, std::span<const int>(targeted), std::span<const int>(term.zf_set),
                                     term.user);
        sig.equivalent.col(j) = channels.h * bf.v;
        for (int u : targeted) {
            const Scalar mag = std::abs(sig.equivalent(u - 1, j));
            if (std::find(term.zf_set.begin(), term.zf_set.end(), u) == term.zf_set.end())
                sig.max_orthogonality_error = std::max(sig.max_orthogonality_error, mag);
            else
                sig.min_zf_gain = std::min(sig.min_zf_gain, mag);
        }
        sig.symbols.push_back(amplitude * unit_symbol<Scalar>(term.file, term.part, term.subpart, config.seed));
        sig.beamformers.push_back(std::move(bf));
    }

    sig.received = ComplexVector<Scalar>::Zero(K);
    // Fixed summation order: term by term.
    for (Eigen::Index j = 0; j < n_terms; ++j)
        sig.received += sig.symbols[static_cast<std::size_t>(j)] * sig.equivalent.col(j);
    if (!noise.empty()) {
        if (static_cast<int>(noise.size()) != K)
            throw InvalidInput("noise sample count must equal K");
        for (int k = 0; k < K; ++k)
            sig.received(k) += noise[static_cast<std::size_t>(k)];
    }
    return sig;
}

template <typename Scalar>
struct DecodeResult {
    int term = 0; // 1-based index of the user's own term
    Complex<Scalar> estimate;
    Scalar residual = 0;
};

/**
 * Receiver processing of one user: subtract every term whose data the user
 * holds in cache (using the exact equivalent channels), divide by the own
 * equivalent channel and compare with the transmitted unit symbol.
 *
 * Throws MissingCacheEntry when a foreign term reaches the user (user is in
 * its zero-forcing set) but is not in the cache.
 */
template <typename Scalar>
DecodeResult<Scalar> decode_user(int user, Complex<Scalar> received, const CacheContents &cache,
                                 std::span<const Complex<Scalar>> equivalent, const TransmissionVector &x,
                                 const SimulationConfig &config)
{
    if (equivalent.size() != x.terms.size())
        throw InvalidInput("one equivalent channel per term required");
    const auto own = std::find_if(x.terms.begin(), x.terms.end(), [&](const auto &t) { return t.user == user; });
    if (own == x.terms.end())
        throw InvalidInput("user " + std::to_string(user) + " is not served in interval " + std::to_string(x.s));
    const auto own_idx = static_cast<std::size_t>(own - x.terms.begin());
    const Scalar amplitude = static_cast<Scalar>(std::sqrt(config.symbol_power));

    Complex<Scalar> rest = received;
    for (std::size_t j = 0; j < x.terms.size(); ++j) {
        if (j == own_idx)
            continue;
        const auto &term = x.terms[j];
        if (cache.contains(term.file, term.part, term.subpart)) {
            rest -= amplitude * unit_symbol<Scalar>(term.file, term.part, term.subpart, config.seed) * equivalent[j];
        } else if (std::find(term.zf_set.begin(), term.zf_set.end(), user) != term.zf_set.end()) {
            throw MissingCacheEntry("interval " + std::to_string(x.s) + ": user " + std::to_string(user) +
                                    " must cancel file " + std::to_string(term.file) + " part " +
                                    std::to_string(term.part) + " subpart " + std::to_string(term.subpart) +
                                    " but does not cache it");
        }
    }

    DecodeResult<Scalar> out;
    out.term = static_cast<int>(own_idx) + 1;
    out.estimate = rest / equivalent[own_idx] / amplitude;
    out.residual = std::abs(out.estimate - unit_symbol<Scalar>(own->file, own->part, own->subpart, config.seed));
    return out;
}

struct DecodeFailure {
    int interval = 0;
    int user = 0;
    std::string reason;
};

struct SimulationSummary {
    double max_residual = 0;
    double max_orthogonality_error = 0;
    int intervals = 0;
    int served_per_interval = 0;
    std::uint64_t seed = 0;
    double noise_power = 0;
    std::vector<bool> interval_success;
    std::vector<DecodeFailure> failures;

    [[nodiscard]] bool passed() const { return failures.empty(); }
};

/// Simulates every interval of a schedule over one channel realization.
/// An interval fails when a served user hits MissingCacheEntry, decodes
/// with residual above tolerance, or a beamformer misses orthogonality.
template <typename Scalar = double>
SimulationSummary simulate_schedule(const Schedule &schedule, const PlacementMatrix &V,
                                    const ChannelRealization<Scalar> &channels, const SimulationConfig &config)
{
    const auto &params = schedule.params;
    const int K = params.K;
    if (channels.users() != K || channels.antennas() != params.L)
        throw InvalidInput("channel realization does not match the scheme dimensions");
    if (config.noise_power < 0)
        throw InvalidInput("noise power must be non-negative");

    std::vector<CacheContents> caches;
    caches.reserve(static_cast<std::size_t>(K));
    for (int k = 1; k <= K; ++k)
        caches.push_back(cache_contents(params, V, k));

    const auto S = static_cast<Eigen::Index>(schedule.vectors.size());
    ComplexMatrix<Scalar> noise;
    if (config.noise_power > 0) {
        std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                          0x6e6f6973u};
        std::mt19937_64 rng(seq);
        std::normal_distribution<Scalar> component(Scalar(0), static_cast<Scalar>(std::sqrt(config.noise_power / 2)));
        noise.resize(K, S);
        for (Eigen::Index s = 0; s < S; ++s)
            for (int k = 0; k < K; ++k) {
                const Scalar re = component(rng);
                const Scalar im = component(rng);
                noise(k, s) = Complex<Scalar>(re, im);
            }
    }

    SimulationSummary summary;
    summary.intervals = static_cast<int>(S);
    summary.served_per_interval = params.served_per_interval();
    summary.seed = config.seed;
    summary.noise_power = config.noise_power;
    summary.interval_success.assign(static_cast<std::size_t>(S), true);

    for (Eigen::Index s = 0; s < S; ++s) {
        const auto &x = schedule.vectors[static_cast<std::size_t>(s)];
        std::span<const Complex<Scalar>> w;
        if (config.noise_power > 0)
            w = std::span<const Complex<Scalar>>(noise.col(s).data(), static_cast<std::size_t>(K));
        const auto sig = simulate_interval(channels, x, config, w);

        auto flag = [&](int user, std::string reason) {
            summary.interval_success[static_cast<std::size_t>(s)] = false;
            summary.failures.push_back({x.s, user, std::move(reason)});
        };

        summary.max_orthogonality_error =
            std::max(summary.max_orthogonality_error, static_cast<double>(sig.max_orthogonality_error));
        if (sig.max_orthogonality_error > config.orthogonality_tolerance)
            flag(0, "beamformer orthogonality error " + std::to_string(sig.max_orthogonality_error));
        if (!(sig.min_zf_gain > 0))
            flag(0, "beamformer vanishes at a zero-forcing set member");

        for (const auto &term : x.terms) {
            const int u = term.user;
            std::vector<Complex<Scalar>> eq(x.terms.size());
            for (std::size_t j = 0; j < eq.size(); ++j)
                eq[j] = sig.equivalent(u - 1, static_cast<Eigen::Index>(j));
            try {
                const auto r = decode_user<Scalar>(u, sig.received(u - 1), caches[static_cast<std::size_t>(u - 1)],
                                                   std::span<const Complex<Scalar>>(eq), x, config);
                summary.max_residual = std::max(summary.max_residual, static_cast<double>(r.residual));
                if (config.noise_power == 0 && !(r.residual <= config.residual_tolerance))
                    flag(u, "residual " + std::to_string(r.residual) + " above tolerance");
            } catch (const MissingCacheEntry &e) {
                flag(u, e.what());
            }
        }
    }
    return summary;
}

/// Noiseless-or-noisy run of the whole scheme on channels drawn from
/// config.seed.
template <typename Scalar = double>
SimulationSummary run_full_simulation(const SchemeParams &params, const Demand &demand,
                                      const SimulationConfig &config)
{
    const auto V = build_placement_matrix(params);
    const auto schedule = build_schedule(params, V, generate_family(params), demand);
    const auto channels = sample_channels<Scalar>(params.K, params.L, config.seed);
    return simulate_schedule<Scalar>(schedule, V, channels, config);
}

} // namespace cachecast
