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


#include "noma/montecarlo.hpp"
#include "noma/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace noma
{
    namespace
    {
        constexpr std::uint64_t chunk_trials = 4096;

        // Neumaier compensated summation.
        class compensated_sum
        {
        public:
            void add(double x) noexcept
            {
                const double t = sum_ + x;
                if (std::abs(sum_) >= std::abs(x))
                    comp_ += (sum_ - t) + x;
                else
                    comp_ += (x - t) + sum_;
                sum_ = t;
            }

            void merge(const compensated_sum &o) noexcept
            {
                add(o.sum_);
                add(o.comp_);
            }

            double value() const noexcept { return sum_ + comp_; }

        private:
            double sum_ = 0.0;
            double comp_ = 0.0;
        };

        struct pair_accumulator
        {
            compensated_sum secrecy;
            compensated_sum secrecy_sq;
            compensated_sum weak_rate;
            std::uint64_t feasible = 0;
            std::uint64_t wins = 0;

            void merge(const pair_accumulator &o) noexcept
            {
                secrecy.merge(o.secrecy);
                secrecy_sq.merge(o.secrecy_sq);
                weak_rate.merge(o.weak_rate);
                feasible += o.feasible;
                wins += o.wins;
            }
        };

        struct accumulator
        {
            std::vector<pair_accumulator> pairs;
            compensated_sum optimal;
            compensated_sum random;
            std::uint64_t effective = 0;

            explicit accumulator(std::size_t n_pairs) : pairs(n_pairs) {}

            void merge(const accumulator &o)
            {
                for (std::size_t i = 0; i < pairs.size(); ++i)
                    pairs[i].merge(o.pairs[i]);
                optimal.merge(o.optimal);
                random.merge(o.random);
                effective += o.effective;
            }
        };

        void run_trial(const simulation_config &config, std::uint64_t trial, double rho_t, accumulator &acc)
        {
            const auto kind = config.objective.kind();
            const auto gains = draw_channel(config, trial);
            const auto metrics = evaluate_all_pairs(gains, rho_t, config.objective);

            std::size_t best = 0;
            for (std::size_t i = 1; i < metrics.size(); ++i)
                if (ranks_before(metrics[i], metrics[best], kind))
                    best = i;

#ifndef NDEBUG
            for (const auto &m : metrics)
                assert(objective_score(metrics[best], kind) >= objective_score(m, kind));
#endif

            for (std::size_t i = 0; i < metrics.size(); ++i)
            {
                auto &p = acc.pairs[i];
                const auto &m = metrics[i];
                p.secrecy.add(m.strong_secrecy);
                p.secrecy_sq.add(m.strong_secrecy * m.strong_secrecy);
                p.weak_rate.add(m.weak_rate);
                p.feasible += m.feasible ? 1 : 0;
            }

            if (metrics[best].feasible)
            {
                acc.pairs[best].wins += 1;
                acc.effective += 1;
                acc.optimal.add(objective_score(metrics[best], kind));
            }

            splitmix64 pick(derive_seed(config.seed, stream::pair_choice, trial));
            double random_score = 0.0;
            if (config.baseline == baseline_policy::uniform_all)
            {
                random_score = objective_score(metrics[uniform_index(pick, metrics.size())], kind);
            }
            else
            {
                std::vector<std::size_t> feasible;
                for (std::size_t i = 0; i < metrics.size(); ++i)
                    if (metrics[i].feasible)
                        feasible.push_back(i);
                if (!feasible.empty())
                    random_score = objective_score(metrics[feasible[uniform_index(pick, feasible.size())]], kind);
            }
            acc.random.add(random_score);
        }

        unsigned worker_count(const simulation_config &config, std::uint64_t n_chunks)
        {
            unsigned n = config.threads != 0 ? config.threads : std::thread::hardware_concurrency();
            n = std::max(n, 1u);
            return static_cast<unsigned>(std::min<std::uint64_t>(n, n_chunks));
        }
    }

    std::string_view to_string(channel_mode m) noexcept
    {
        switch (m)
        {
        case channel_mode::profile_arithmetic:
            return "arith";
        case channel_mode::profile_harmonic:
            return "harmonic";
        case channel_mode::iid_sorted:
            return "iid";
        }
        return "unknown";
    }

    std::string_view to_string(baseline_policy b) noexcept
    {
        return b == baseline_policy::uniform_all ? "uniform" : "feasible";
    }

    std::string_view to_string(sweep_param p) noexcept
    {
        return p == sweep_param::r_th ? "r_th" : "transmit_power_watts";
    }

    void simulation_config::validate() const
    {
        params.validate();
        if (params.n_users() < 2)
            throw domain_error("simulation requires at least two users");
        if (n_trials < 1)
            throw domain_error("n_trials must be at least 1");
        if (sweep)
        {
            if (sweep->values.empty())
                throw domain_error("sweep needs at least one value");
            for (double v : sweep->values)
                if (!std::isfinite(v) || !(v > 0.0))
                    throw domain_error("sweep values must be positive and finite");
            if (sweep->param == sweep_param::r_th && objective.kind() != objective_kind::qos_aware_secrecy)
                throw domain_error("an r_th sweep requires the QoS-aware objective");
        }
    }

    user_pair simulation_result::most_frequent_best() const
    {
        user_pair best{1, 2};
        double freq = -1.0;
        for (const auto &[pair, f] : best_pair_frequency)
        {
            if (f > freq)
            {
                best = pair;
                freq = f;
            }
        }
        return best;
    }

    channel_gains draw_channel(const simulation_config &config, std::uint64_t trial)
    {
        splitmix64 gen(derive_seed(config.seed, stream::channel, trial));
        const int n = static_cast<int>(config.params.n_users());
        switch (config.mode)
        {
        case channel_mode::iid_sorted:
            return sample_gains(config.params, gen);
        case channel_mode::profile_arithmetic:
            return profile_gains({profile_kind::arithmetic, n},
                                 exponential(gen, profile_anchor_mean(profile_kind::arithmetic, config.params)));
        case channel_mode::profile_harmonic:
            return profile_gains({profile_kind::harmonic, n},
                                 exponential(gen, profile_anchor_mean(profile_kind::harmonic, config.params)));
        }
        throw domain_error("unknown channel mode");
    }

    simulation_result run_simulation(const simulation_config &config)
    {
        config.validate();

        const auto pairs = enumerate_pairs(static_cast<int>(config.params.n_users()));
        const double rho_t = config.params.rho_t();
        const std::uint64_t n_chunks = (config.n_trials + chunk_trials - 1) / chunk_trials;

        std::vector<accumulator> chunks(n_chunks, accumulator(pairs.size()));
        std::atomic<std::uint64_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;

        auto worker = [&]() {
            try
            {
                for (std::uint64_t c = next++; c < n_chunks; c = next++)
                {
                    const std::uint64_t begin = c * chunk_trials;
                    const std::uint64_t end = std::min(config.n_trials, begin + chunk_trials);
                    for (std::uint64_t t = begin; t < end; ++t)
                        run_trial(config, t, rho_t, chunks[c]);
                }
            }
            catch (...)
            {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        };

        const unsigned n_workers = worker_count(config, n_chunks);
        if (n_workers <= 1)
            worker();
        else
        {
            std::vector<std::jthread> pool;
            pool.reserve(n_workers);
            for (unsigned w = 0; w < n_workers; ++w)
                pool.emplace_back(worker);
        }
        if (failure)
            std::rethrow_exception(failure);

        // Reduction in chunk order keeps results independent of scheduling.
        accumulator total(pairs.size());
        for (const auto &c : chunks)
            total.merge(c);

        if (total.effective == 0)
            throw degenerate_result("no trial produced a feasible pair; QoS target exceeds every pair's range");

        const auto n = static_cast<double>(config.n_trials);
        const auto eff = static_cast<double>(total.effective);

        simulation_result result;
        result.n_trials = config.n_trials;
        result.n_trials_effective = total.effective;
        for (std::size_t i = 0; i < pairs.size(); ++i)
        {
            const auto &p = total.pairs[i];
            pair_average avg;
            avg.avg_strong_secrecy = p.secrecy.value() / n;
            avg.avg_weak_rate = p.weak_rate.value() / n;
            avg.feasibility_fraction = static_cast<double>(p.feasible) / n;
            if (config.n_trials > 1)
            {
                const double var = (p.secrecy_sq.value() - n * avg.avg_strong_secrecy * avg.avg_strong_secrecy) / (n - 1.0);
                avg.strong_secrecy_std_error = std::sqrt(std::max(var, 0.0) / n);
            }
            result.per_pair_avg[pairs[i]] = avg;
            result.best_pair_frequency[pairs[i]] = static_cast<double>(p.wins) / eff;
        }
        result.optimal_avg_secrecy = total.optimal.value() / n;
        result.random_avg_secrecy = total.random.value() / n;
        if (result.random_avg_secrecy > 0.0)
            result.improvement_percent = 100.0 * (result.optimal_avg_secrecy - result.random_avg_secrecy) / result.random_avg_secrecy;
        return result;
    }

    double random_pair_baseline(const simulation_config &config)
    {
        return run_simulation(config).random_avg_secrecy;
    }

    simulation_config with_sweep_value(const simulation_config &config, sweep_param param, double value)
    {
        simulation_config point = config;
        point.sweep.reset();
        if (param == sweep_param::r_th)
            point.objective = selection_objective::qos_aware(value);
        else
            point.params.transmit_power_watts = value;
        return point;
    }

    std::vector<sweep_point> sweep_run(const simulation_config &config)
    {
        config.validate();
        if (!config.sweep)
            throw domain_error("config has no sweep");

        std::vector<sweep_point> out;
        out.reserve(config.sweep->values.size());
        for (double v : config.sweep->values)
            out.push_back({v, run_simulation(with_sweep_value(config, config.sweep->param, v))});
        return out;
    }
}
