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


#include "noma/pairing.hpp"
#include "noma/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace noma
{
    std::string to_string(const user_pair &p)
    {
        return "(" + std::to_string(p.m) + "," + std::to_string(p.n) + ")";
    }

    const qos_target &selection_objective::target() const
    {
        if (!target_)
            throw std::logic_error("objective carries no QoS target");
        return *target_;
    }

    double objective_score(const pair_metrics &metrics, objective_kind kind) noexcept
    {
        if (!metrics.feasible)
            return 0.0;
        return kind == objective_kind::max_weak_rate ? metrics.weak_rate : metrics.strong_secrecy;
    }

    std::vector<user_pair> enumerate_pairs(int n_users)
    {
        if (n_users < 2)
            throw domain_error("pairing requires at least two users");
        std::vector<user_pair> pairs;
        pairs.reserve(static_cast<std::size_t>(n_users * (n_users - 1) / 2));
        for (int m = 1; m <= n_users; ++m)
            for (int n = m + 1; n <= n_users; ++n)
                pairs.push_back({m, n});
        return pairs;
    }

    pair_metrics evaluate_pair(const user_pair &pair, const channel_gains &gains, double rho_t, const selection_objective &objective)
    {
        if (pair.m < 1 || pair.m >= pair.n || static_cast<std::size_t>(pair.n) > gains.size())
            throw domain_error("invalid pair " + to_string(pair) + " for " + std::to_string(gains.size()) + " users");

        const double gm = gains.gain(pair.m);
        const double gn = gains.gain(pair.n);

        pair_metrics out;
        out.pair = pair;

        power_split split = power_split::all_strong();
        switch (objective.kind())
        {
        case objective_kind::max_strong_secrecy:
            split = power_split::all_strong();
            break;
        case objective_kind::max_weak_rate:
            split = power_split::all_weak();
            break;
        case objective_kind::qos_aware_secrecy:
            try
            {
                split = optimal_alpha(gn, rho_t, objective.target());
            }
            catch (const infeasible_qos &)
            {
                return out;
            }
            break;
        }

        out.split = split;
        out.strong_secrecy = secrecy_rate_strong(gm, gn, split, rho_t);
        out.weak_rate = weak_user_rate(gm, gn, split, rho_t);
        out.feasible = true;
        return out;
    }

    std::vector<pair_metrics> evaluate_all_pairs(const channel_gains &gains, double rho_t, const selection_objective &objective)
    {
        const auto pairs = enumerate_pairs(static_cast<int>(gains.size()));
        std::vector<pair_metrics> out;
        out.reserve(pairs.size());
        for (const auto &p : pairs)
            out.push_back(evaluate_pair(p, gains, rho_t, objective));
        return out;
    }

    bool ranks_before(const pair_metrics &a, const pair_metrics &b, objective_kind kind) noexcept
    {
        if (a.feasible != b.feasible)
            return a.feasible;
        const double sa = objective_score(a, kind);
        const double sb = objective_score(b, kind);
        if (sa != sb)
            return sa > sb;
        return a.pair < b.pair;
    }

    std::vector<pair_metrics> rank_pairs(const channel_gains &gains, double rho_t, const selection_objective &objective)
    {
        auto metrics = evaluate_all_pairs(gains, rho_t, objective);
        std::sort(metrics.begin(), metrics.end(),
                  [kind = objective.kind()](const pair_metrics &a, const pair_metrics &b) { return ranks_before(a, b, kind); });
        return metrics;
    }

    pair_metrics select_best_pair(const channel_gains &gains, double rho_t, const selection_objective &objective)
    {
        auto ranked = rank_pairs(gains, rho_t, objective);
        if (!ranked.front().feasible)
        {
            std::vector<pair_bound> bounds;
            for (const auto &p : enumerate_pairs(static_cast<int>(gains.size())))
                bounds.push_back({p.m, p.n, rth_upper_bound(gains.gain(p.n), rho_t)});
            throw no_feasible_pair(objective.target().r_th(), std::move(bounds));
        }
        return ranked.front();
    }

    std::vector<std::vector<user_pair>> predicted_rank_groups(const gain_profile &profile, objective_kind kind)
    {
        if (profile.n_users != 4)
            throw domain_error("analytical pair orders are tabulated for four users only");

        switch (kind)
        {
        case objective_kind::max_strong_secrecy:
            if (profile.kind == profile_kind::arithmetic)
                return {{{1, 4}}, {{2, 4}}, {{1, 3}}, {{3, 4}}, {{2, 3}}, {{1, 2}}};
            return {{{1, 4}}, {{1, 3}}, {{1, 2}}, {{2, 4}}, {{2, 3}}, {{3, 4}}};
        case objective_kind::max_weak_rate:
            return {{{1, 2}}, {{1, 3}, {2, 3}}, {{1, 4}, {2, 4}, {3, 4}}};
        case objective_kind::qos_aware_secrecy:
            break;
        }
        throw domain_error("no analytical pair order for the QoS-aware objective; rank numerically");
    }

    std::vector<user_pair> predicted_order(const gain_profile &profile, objective_kind kind)
    {
        std::vector<user_pair> out;
        for (auto group : predicted_rank_groups(profile, kind))
        {
            std::sort(group.begin(), group.end());
            out.insert(out.end(), group.begin(), group.end());
        }
        return out;
    }

    double qos_threshold_24_vs_13(double gain4, double rho_t)
    {
        if (!(gain4 > 0.0) || !(rho_t > 0.0))
            throw domain_error("gain4 and rho_t must be positive");
        const double x = gain4 * rho_t;
        return std::log1p(2.0 * x * x / (1.0 + 3.0 * x)) / std::numbers::ln2;
    }
}
