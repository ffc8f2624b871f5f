// SPDX-License-Identifier: Apache-2.0
//
// noma-secrecy: power allocation and user-pair selection for untrusted NOMA
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


#ifndef NOMA_CHANNEL_HPP
#define NOMA_CHANNEL_HPP

#include "noma/rng.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace noma
{
    // Link budget and geometry of the downlink cell. All powers in linear
    // watts; dBm only appears at the CLI boundary.
    struct system_params
    {
        double transmit_power_watts = 1e-3;
        double noise_power_watts = 1e-15;
        double path_loss_constant = 1.0; // L_p
        double path_loss_exponent = 3.0; // e
        std::vector<double> distances_m = {50.0, 100.0, 150.0, 200.0};

        // Transmit SNR P_t / sigma^2.
        double rho_t() const;
        std::size_t n_users() const noexcept { return distances_m.size(); }

        // Throws domain_error on non-positive powers, path-loss terms or distances.
        void validate() const;
    };

    double dbm_to_watts(double dbm);
    double watts_to_dbm(double watts);

    enum class gain_source
    {
        sampled,
        profile_arithmetic,
        profile_harmonic,
        explicit_values,
    };

    std::string_view to_string(gain_source s) noexcept;

    // Channel power gains |h_i|^2 in strictly descending order. Users are
    // addressed 1-based, user 1 being the strongest.
    class channel_gains
    {
    public:
        // Throws domain_error unless gains are positive, finite and strictly
        // descending. `user_ids` maps sorted position to the originating
        // user (index into system_params::distances_m); identity if empty.
        channel_gains(std::vector<double> gains, gain_source source, std::vector<std::size_t> user_ids = {});

        std::span<const double> values() const noexcept { return gains_; }
        std::size_t size() const noexcept { return gains_.size(); }
        gain_source source() const noexcept { return source_; }
        std::span<const std::size_t> user_ids() const noexcept { return user_ids_; }

        // Gain of the user at sorted rank `user` (1-based). Throws domain_error
        // when out of range.
        double gain(int user) const;

    private:
        std::vector<double> gains_;
        std::vector<std::size_t> user_ids_;
        gain_source source_;
    };

    enum class profile_kind
    {
        arithmetic, // |h_i|^2 = (N - i + 1) |h_N|^2
        harmonic,   // |h_i|^2 = |h_1|^2 / i
    };

    struct gain_profile
    {
        profile_kind kind;
        int n_users;

        gain_profile(profile_kind k, int n);
    };

    // Mean power gain L_p * d^-e of a user at `distance_m`.
    double mean_gain(double distance_m, const system_params &params);

    // One Rayleigh realization: independent exponential gains with the
    // users' path-loss means, sorted descending. Ties (measure zero) are
    // broken by redrawing the tied users.
    channel_gains sample_gains(const system_params &params, std::uint64_t seed);
    channel_gains sample_gains(const system_params &params, splitmix64 &gen);

    // Deterministic profile. `base_gain` is |h_N|^2 for the arithmetic
    // profile and |h_1|^2 for the harmonic one.
    channel_gains profile_gains(const gain_profile &profile, double base_gain);

    // Mean of the anchor user whose gain seeds a randomized profile: the
    // weakest (smallest mean) user for arithmetic, the strongest for harmonic.
    double profile_anchor_mean(profile_kind kind, const system_params &params);
}

#endif
