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


#ifndef NOMA_PAIRING_HPP
#define NOMA_PAIRING_HPP

#include "noma/channel.hpp"
#include "noma/core.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace noma
{
    // Users m < n, 1-based; m is the strong user of the pair.
    struct user_pair
    {
        int m;
        int n;

        friend auto operator<=>(const user_pair &, const user_pair &) = default;
    };

    std::string to_string(const user_pair &p); // "(m,n)"

    enum class objective_kind
    {
        max_strong_secrecy, // alpha_m = 1, QoS ignored
        max_weak_rate,      // alpha_m = 0, secrecy ignored
        qos_aware_secrecy,  // optimal alpha_m under R_nn >= r_th
    };

    class selection_objective
    {
    public:
        static selection_objective max_strong_secrecy() { return selection_objective(objective_kind::max_strong_secrecy, std::nullopt); }
        static selection_objective max_weak_rate() { return selection_objective(objective_kind::max_weak_rate, std::nullopt); }
        static selection_objective qos_aware(double r_th) { return selection_objective(objective_kind::qos_aware_secrecy, qos_target(r_th)); }

        objective_kind kind() const noexcept { return kind_; }

        // Throws std::logic_error unless kind() == qos_aware_secrecy.
        const qos_target &target() const;

    private:
        selection_objective(objective_kind k, std::optional<qos_target> t) : kind_(k), target_(t) {}

        objective_kind kind_;
        std::optional<qos_target> target_;
    };

    struct pair_metrics
    {
        user_pair pair{};
        std::optional<power_split> split; // empty when infeasible
        double strong_secrecy = 0.0;
        double weak_rate = 0.0;
        bool feasible = false;
    };

    // Value ranked by the objective: weak_rate for max_weak_rate, otherwise
    // strong_secrecy. Zero for infeasible pairs.
    double objective_score(const pair_metrics &metrics, objective_kind kind) noexcept;

    // All C(n_users, 2) pairs in lexicographic order. Throws domain_error
    // for n_users < 2.
    std::vector<user_pair> enumerate_pairs(int n_users);

    // Metrics of one pair under the objective. QoS infeasibility is encoded
    // in the result (feasible = false), never thrown. Throws domain_error
    // when the pair is not 1 <= m < n <= gains.size().
    pair_metrics evaluate_pair(const user_pair &pair, const channel_gains &gains, double rho_t, const selection_objective &objective);

    // evaluate_pair over enumerate_pairs(gains.size()), in enumeration order.
    std::vector<pair_metrics> evaluate_all_pairs(const channel_gains &gains, double rho_t, const selection_objective &objective);

    // Strict weak order used for ranking: feasible before infeasible, then
    // descending score, then lexicographic (m, n).
    bool ranks_before(const pair_metrics &a, const pair_metrics &b, objective_kind kind) noexcept;

    std::vector<pair_metrics> rank_pairs(const channel_gains &gains, double rho_t, const selection_objective &objective);

    // Head of rank_pairs. For the QoS objective throws no_feasible_pair,
    // carrying each pair's R_th bound, when no pair is feasible.
    pair_metrics select_best_pair(const channel_gains &gains, double rho_t, const selection_objective &objective);

    // Analytical rank groups for four users, best first:
    //  arithmetic profile, secrecy only: (1,4) (2,4) (1,3) (3,4) (2,3) (1,2)
    //  harmonic profile, secrecy only:   (1,4) (1,3) (1,2) (2,4) (2,3) (3,4)
    //  any sorted gains, weak rate:      {(1,2)} {(1,3),(2,3)} {(1,4),(2,4),(3,4)}
    // Pairs inside a group tie exactly. Throws domain_error for other
    // objectives or n_users != 4.
    std::vector<std::vector<user_pair>> predicted_rank_groups(const gain_profile &profile, objective_kind kind);

    // predicted_rank_groups flattened, ties listed lexicographically.
    std::vector<user_pair> predicted_order(const gain_profile &profile, objective_kind kind);

    // Under the arithmetic profile with optimal splits, pair (2,4) gives the
    // strong user more secrecy than (1,3) iff
    //   R_th < log2(1 + 2 (gain4 rho_t)^2 / (1 + 3 gain4 rho_t)).
    double qos_threshold_24_vs_13(double gain4, double rho_t);
}

#endif
