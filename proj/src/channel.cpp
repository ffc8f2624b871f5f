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


#include "noma/channel.hpp"
#include "noma/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace noma
{
    double system_params::rho_t() const
    {
        return transmit_power_watts / noise_power_watts;
    }

    void system_params::validate() const
    {
        auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };

        if (!positive(transmit_power_watts))
            throw domain_error("transmit power must be positive and finite");
        if (!positive(noise_power_watts))
            throw domain_error("noise power must be positive and finite");
        if (!positive(path_loss_constant))
            throw domain_error("path-loss constant must be positive and finite");
        if (!positive(path_loss_exponent))
            throw domain_error("path-loss exponent must be positive and finite");
        if (distances_m.empty())
            throw domain_error("at least one user distance is required");
        if (!std::all_of(distances_m.begin(), distances_m.end(), positive))
            throw domain_error("user distances must be positive and finite");
    }

    double dbm_to_watts(double dbm)
    {
        return std::pow(10.0, (dbm - 30.0) / 10.0);
    }

    double watts_to_dbm(double watts)
    {
        if (!(watts > 0.0))
            throw domain_error("power in watts must be positive to express in dBm");
        return 10.0 * std::log10(watts) + 30.0;
    }

    std::string_view to_string(gain_source s) noexcept
    {
        switch (s)
        {
        case gain_source::sampled:
            return "sampled";
        case gain_source::profile_arithmetic:
            return "profile-arithmetic";
        case gain_source::profile_harmonic:
            return "profile-harmonic";
        case gain_source::explicit_values:
            return "explicit";
        }
        return "unknown";
    }

    channel_gains::channel_gains(std::vector<double> gains, gain_source source, std::vector<std::size_t> user_ids)
        : gains_(std::move(gains)), user_ids_(std::move(user_ids)), source_(source)
    {
        if (gains_.empty())
            throw domain_error("channel gains must not be empty");
        for (std::size_t i = 0; i < gains_.size(); ++i)
        {
            if (!std::isfinite(gains_[i]) || !(gains_[i] > 0.0))
                throw domain_error("channel gain " + std::to_string(i + 1) + " must be positive and finite");
            if (i > 0 && !(gains_[i - 1] > gains_[i]))
                throw domain_error("channel gains must be strictly descending (violated at user " + std::to_string(i + 1) + ")");
        }

        if (user_ids_.empty())
        {
            user_ids_.resize(gains_.size());
            std::iota(user_ids_.begin(), user_ids_.end(), std::size_t{0});
        }
        else if (user_ids_.size() != gains_.size())
            throw domain_error("user id map must have one entry per gain");
    }

    double channel_gains::gain(int user) const
    {
        if (user < 1 || static_cast<std::size_t>(user) > gains_.size())
            throw domain_error("user index " + std::to_string(user) + " out of range 1.." + std::to_string(gains_.size()));
        return gains_[static_cast<std::size_t>(user - 1)];
    }

    gain_profile::gain_profile(profile_kind k, int n) : kind(k), n_users(n)
    {
        if (n < 2)
            throw domain_error("a gain profile needs at least two users");
    }

    double mean_gain(double distance_m, const system_params &params)
    {
        if (!(distance_m > 0.0) || !std::isfinite(distance_m))
            throw domain_error("distance must be positive and finite");
        return params.path_loss_constant * std::pow(distance_m, -params.path_loss_exponent);
    }

    channel_gains sample_gains(const system_params &params, std::uint64_t seed)
    {
        splitmix64 gen(derive_seed(seed, stream::channel, 0));
        return sample_gains(params, gen);
    }

    channel_gains sample_gains(const system_params &params, splitmix64 &gen)
    {
        params.validate();
        const std::size_t n = params.n_users();
        if (n < 2)
            throw domain_error("sampling requires at least two users");

        std::vector<double> means(n);
        for (std::size_t i = 0; i < n; ++i)
            means[i] = mean_gain(params.distances_m[i], params);

        std::vector<double> draw(n);
        for (std::size_t i = 0; i < n; ++i)
            draw[i] = exponential(gen, means[i]);

        std::vector<std::size_t> order(n);
        for (;;)
        {
            std::iota(order.begin(), order.end(), std::size_t{0});
            std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return draw[a] > draw[b]; });

            bool tied = false;
            for (std::size_t k = 1; k < n; ++k)
            {
                if (draw[order[k - 1]] == draw[order[k]])
                {
                    tied = true;
                    draw[order[k - 1]] = exponential(gen, means[order[k - 1]]);
                    draw[order[k]] = exponential(gen, means[order[k]]);
                }
            }
            if (!tied)
                break;
        }

        std::vector<double> sorted(n);
        for (std::size_t k = 0; k < n; ++k)
            sorted[k] = draw[order[k]];
        return channel_gains(std::move(sorted), gain_source::sampled, std::move(order));
    }

    channel_gains profile_gains(const gain_profile &profile, double base_gain)
    {
        if (!(base_gain > 0.0) || !std::isfinite(base_gain))
            throw domain_error("profile base gain must be positive and finite");

        const auto n = static_cast<std::size_t>(profile.n_users);
        std::vector<double> g(n);
        for (std::size_t i = 0; i < n; ++i)
        {
            const auto rank = static_cast<double>(i + 1);
            if (profile.kind == profile_kind::arithmetic)
                g[i] = static_cast<double>(n - i) * base_gain;
            else
                g[i] = base_gain / rank;
        }
        const auto src = profile.kind == profile_kind::arithmetic ? gain_source::profile_arithmetic : gain_source::profile_harmonic;
        return channel_gains(std::move(g), src);
    }

    double profile_anchor_mean(profile_kind kind, const system_params &params)
    {
        params.validate();
        double lo = mean_gain(params.distances_m.front(), params);
        double hi = lo;
        for (double d : params.distances_m)
        {
            const double m = mean_gain(d, params);
            lo = std::min(lo, m);
            hi = std::max(hi, m);
        }
        return kind == profile_kind::arithmetic ? lo : hi;
    }
}
