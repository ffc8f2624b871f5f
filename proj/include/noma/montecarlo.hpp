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


#ifndef NOMA_MONTECARLO_HPP
#define NOMA_MONTECARLO_HPP

#include "noma/channel.hpp"
#include "noma/pairing.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

namespace noma
{
    enum class channel_mode
    {
        profile_arithmetic, // sample |h_N|^2 from the weakest user's law, derive the rest
        profile_harmonic,   // sample |h_1|^2 from the strongest user's law, derive the rest
        iid_sorted,         // sample every user independently, then sort
    };

    // How the random-pairing baseline treats a drawn pair that cannot meet
    // the QoS target.
    enum class baseline_policy
    {
        uniform_all,   // any of the C(N,2) pairs; infeasible pairs score 0
        feasible_only, // uniform over the pairs feasible in that realization
    };

    enum class sweep_param
    {
        r_th,
        transmit_power_watts,
    };

    std::string_view to_string(channel_mode m) noexcept;
    std::string_view to_string(baseline_policy b) noexcept;
    std::string_view to_string(sweep_param p) noexcept;

    struct sweep_spec
    {
        sweep_param param = sweep_param::r_th;
        std::vector<double> values;
    };

    struct simulation_config
    {
        system_params params;
        std::uint64_t n_trials = 100000;
        std::uint64_t seed = 1;
        selection_objective objective = selection_objective::qos_aware(0.5);
        channel_mode mode = channel_mode::profile_arithmetic;
        baseline_policy baseline = baseline_policy::uniform_all;
        std::optional<sweep_spec> sweep;
        unsigned threads = 0; // 0 = hardware concurrency

        // Throws domain_error on invalid parameters, zero trials, too few
        // users, or a malformed sweep.
        void validate() const;
    };

    struct pair_average
    {
        double avg_strong_secrecy = 0.0;
        double avg_weak_rate = 0.0;
        double feasibility_fraction = 0.0;
        double strong_secrecy_std_error = 0.0; // standard error of avg_strong_secrecy
    };

    struct simulation_result
    {
        std::map<user_pair, pair_average> per_pair_avg;
        std::map<user_pair, double> best_pair_frequency; // over trials with a feasible winner

        // Averages of the objective score (strong-user secrecy, or weak-user
        // rate under max_weak_rate) over all trials; 0 where nothing is feasible.
        double optimal_avg_secrecy = 0.0;
        double random_avg_secrecy = 0.0;
        // 100 (optimal - random) / random; empty when random is not positive.
        std::optional<double> improvement_percent;

        std::uint64_t n_trials = 0;
        std::uint64_t n_trials_effective = 0; // trials where some pair was feasible

        // Pair with the highest win frequency, lexicographic on ties.
        user_pair most_frequent_best() const;
    };

    // Channel realization `trial` of the configured experiment.
    channel_gains draw_channel(const simulation_config &config, std::uint64_t trial);

    // Deterministic for fixed (config, seed) irrespective of thread count.
    // Throws degenerate_result when no trial has a feasible pair.
    simulation_result run_simulation(const simulation_config &config);

    // Average objective score of uniformly random pairing under the configured
    // baseline policy, on the same channel realizations as run_simulation.
    double random_pair_baseline(const simulation_config &config);

    struct sweep_point
    {
        double value;
        simulation_result result;
    };

    // One simulation per sweep value. Every point reuses the same channel
    // realizations (common random numbers), so a point equals run_simulation
    // with that value substituted into the config.
    std::vector<sweep_point> sweep_run(const simulation_config &config);

    // config with sweep parameter set to `value` and the sweep removed.
    simulation_config with_sweep_value(const simulation_config &config, sweep_param param, double value);
}

#endif
