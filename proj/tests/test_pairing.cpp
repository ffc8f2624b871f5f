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


#include <catch_amalgamated.hpp>

#include "noma/errors.hpp"
#include "noma/pairing.hpp"
#include "noma/rng.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

using namespace noma;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{
    double log_uniform(splitmix64 &g, double lo, double hi)
    {
        return std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * uniform_open01(g));
    }

    std::vector<user_pair> order_of(const std::vector<pair_metrics> &ranked)
    {
        std::vector<user_pair> out;
        for (const auto &m : ranked)
            out.push_back(m.pair);
        return out;
    }

    channel_gains random_sorted(splitmix64 &g, int n)
    {
        std::vector<double> v;
        double x = log_uniform(g, 1e-6, 1e-2);
        for (int i = 0; i < n; ++i)
        {
            v.push_back(x);
            x /= log_uniform(g, 1.001, 10.0);
        }
        return channel_gains(v, gain_source::explicit_values);
    }

    const std::vector<user_pair> column_a = {{1, 4}, {2, 4}, {1, 3}, {3, 4}, {2, 3}, {1, 2}};
    const std::vector<user_pair> column_b = {{1, 4}, {1, 3}, {1, 2}, {2, 4}, {2, 3}, {3, 4}};
}

TEST_CASE("enumerate_pairs", "[pairing]")
{
    CHECK(enumerate_pairs(4) == std::vector<user_pair>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    CHECK(enumerate_pairs(2) == std::vector<user_pair>{{1, 2}});
    CHECK(enumerate_pairs(5).size() == 10);
    CHECK(enumerate_pairs(20).size() == 190);
    CHECK_THROWS_AS(enumerate_pairs(1), domain_error);
    CHECK(to_string(user_pair{2, 4}) == "(2,4)");
}

TEST_CASE("selection_objective", "[pairing]")
{
    CHECK(selection_objective::qos_aware(0.5).target().r_th() == 0.5);
    CHECK_THROWS_AS(selection_objective::max_strong_secrecy().target(), std::logic_error);
    CHECK_THROWS_AS(selection_objective::max_weak_rate().target(), std::logic_error);
    CHECK_THROWS_AS(selection_objective::qos_aware(0.0), domain_error);
}

TEST_CASE("evaluate_pair", "[pairing]")
{
    const channel_gains arith({4.0, 3.0, 2.0, 1.0}, gain_source::profile_arithmetic);

    const auto s = evaluate_pair({1, 4}, arith, 1.0, selection_objective::max_strong_secrecy());
    CHECK(s.feasible);
    REQUIRE(s.split);
    CHECK(*s.split == power_split::all_strong());
    CHECK_THAT(s.strong_secrecy, WithinAbs(1.32192809488736234787, 1e-12));
    CHECK(s.weak_rate == 0.0);

    for (const auto &p : enumerate_pairs(4))
    {
        const auto w = evaluate_pair(p, arith, 1.0, selection_objective::max_weak_rate());
        CHECK(w.strong_secrecy == 0.0);
        CHECK_THAT(w.weak_rate, WithinAbs(std::log2(1.0 + arith.gain(p.n)), 1e-12));
    }

    const channel_gains scaled({40.0, 30.0, 20.0, 10.0}, gain_source::explicit_values);
    const auto q = evaluate_pair({2, 4}, scaled, 1.0, selection_objective::qos_aware(1.0));
    CHECK(q.feasible);
    REQUIRE(q.split);
    CHECK_THAT(q.split->alpha_m(), WithinAbs(0.45, 1e-15));
    CHECK_THAT(q.weak_rate, WithinAbs(1.0, 1e-12));
    CHECK_THAT(q.strong_secrecy, WithinAbs(1.3985493764902749, 1e-12));

    // log2(1 + 10) is the bound for weak user 4.
    const auto bad = evaluate_pair({2, 4}, scaled, 1.0, selection_objective::qos_aware(3.5));
    CHECK_FALSE(bad.feasible);
    CHECK_FALSE(bad.split);
    CHECK(bad.strong_secrecy == 0.0);
    CHECK(bad.weak_rate == 0.0);

    CHECK_THROWS_AS(evaluate_pair({2, 2}, scaled, 1.0, selection_objective::max_weak_rate()), domain_error);
    CHECK_THROWS_AS(evaluate_pair({3, 2}, scaled, 1.0, selection_objective::max_weak_rate()), domain_error);
    CHECK_THROWS_AS(evaluate_pair({1, 5}, scaled, 1.0, selection_objective::max_weak_rate()), domain_error);
    CHECK_THROWS_AS(evaluate_pair({0, 2}, scaled, 1.0, selection_objective::max_weak_rate()), domain_error);
}

TEST_CASE("rank orders match the analytical columns", "[pairing][property]")
{
    splitmix64 g(21);
    for (int i = 0; i < 200; ++i)
    {
        const double base = log_uniform(g, 1e-9, 1e-2);
        const double rho = log_uniform(g, 1e-2, 1e14);
        const auto arith = profile_gains({profile_kind::arithmetic, 4}, base);
        const auto harm = profile_gains({profile_kind::harmonic, 4}, base);
        const auto obj = selection_objective::max_strong_secrecy();
        REQUIRE(order_of(rank_pairs(arith, rho, obj)) == column_a);
        REQUIRE(order_of(rank_pairs(harm, rho, obj)) == column_b);
    }
}

TEST_CASE("predicted orders", "[pairing]")
{
    const gain_profile arith(profile_kind::arithmetic, 4);
    const gain_profile harm(profile_kind::harmonic, 4);
    CHECK(predicted_order(arith, objective_kind::max_strong_secrecy) == column_a);
    CHECK(predicted_order(harm, objective_kind::max_strong_secrecy) == column_b);

    const std::vector<std::vector<user_pair>> groups = {{{1, 2}}, {{1, 3}, {2, 3}}, {{1, 4}, {2, 4}, {3, 4}}};
    CHECK(predicted_rank_groups(arith, objective_kind::max_weak_rate) == groups);
    CHECK(predicted_rank_groups(harm, objective_kind::max_weak_rate) == groups);
    CHECK(predicted_order(arith, objective_kind::max_weak_rate) ==
          std::vector<user_pair>{{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}});

    CHECK_THROWS_AS(predicted_order(arith, objective_kind::qos_aware_secrecy), domain_error);
    CHECK_THROWS_AS(predicted_order(gain_profile(profile_kind::arithmetic, 5), objective_kind::max_strong_secrecy), domain_error);
}

TEST_CASE("weak-rate ranking ties on the weak user", "[pairing][property]")
{
    splitmix64 g(22);
    const std::vector<user_pair> expect = {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}};
    for (int i = 0; i < 200; ++i)
    {
        const auto gains = random_sorted(g, 4);
        const double rho = log_uniform(g, 1.0, 1e12);
        const auto ranked = rank_pairs(gains, rho, selection_objective::max_weak_rate());
        REQUIRE(order_of(ranked) == expect);
        REQUIRE(ranked[1].weak_rate == ranked[2].weak_rate);
        REQUIRE(ranked[3].weak_rate == ranked[4].weak_rate);
        REQUIRE(ranked[4].weak_rate == ranked[5].weak_rate);
        REQUIRE(ranked[0].weak_rate > ranked[1].weak_rate);
    }
}

TEST_CASE("best pair for the unconstrained objectives", "[pairing][property]")
{
    splitmix64 g(23);
    for (int i = 0; i < 500; ++i)
    {
        const int n = 2 + static_cast<int>(uniform_index(g, 9));
        const auto gains = random_sorted(g, n);
        const double rho = log_uniform(g, 1e-2, 1e14);
        REQUIRE(select_best_pair(gains, rho, selection_objective::max_strong_secrecy()).pair == user_pair{1, n});
        REQUIRE(select_best_pair(gains, rho, selection_objective::max_weak_rate()).pair == user_pair{1, 2});
    }
}

TEST_CASE("QoS-aware selection", "[pairing]")
{
    // Defaults: rho_t = 1e12, distances 50..200 m, mean gains as the profile base.
    const auto arith = profile_gains({profile_kind::arithmetic, 4}, 1.25e-7);
    const auto best = select_best_pair(arith, 1e12, selection_objective::qos_aware(0.5));
    CHECK(best.pair == user_pair{1, 4});

    const channel_gains tiny({4.0, 3.0, 2.0, 1.0}, gain_source::explicit_values);
    try
    {
        (void)select_best_pair(tiny, 1.0, selection_objective::qos_aware(5.0));
        FAIL("expected no_feasible_pair");
    }
    catch (const no_feasible_pair &e)
    {
        CHECK(e.r_th() == 5.0);
        REQUIRE(e.bounds().size() == 6);
        for (const auto &b : e.bounds())
            CHECK_THAT(b.rth_upper, WithinAbs(std::log2(1.0 + tiny.gain(b.n)), 1e-12));
    }

    // Only the pairs whose weak user is 2 or 3 remain feasible.
    const auto ranked = rank_pairs(tiny, 1.0, selection_objective::qos_aware(1.2));
    CHECK_FALSE(ranked[3].feasible);
    CHECK_FALSE(ranked[5].feasible);
    CHECK(ranked[2].feasible);
    CHECK(ranked[3].pair == user_pair{1, 4});
    CHECK(ranked[5].pair == user_pair{3, 4});
}

TEST_CASE("(2,4) vs (1,3) threshold", "[pairing]")
{
    CHECK_THAT(qos_threshold_24_vs_13(1.0, 1.0), WithinAbs(0.584962500721156181454, 1e-14));
    CHECK_THAT(qos_threshold_24_vs_13(0.5, 1.0), WithinAbs(0.263034405833793821131, 1e-14));
    CHECK_THAT(qos_threshold_24_vs_13(10.0, 1.0), WithinAbs(2.89755273102918226692, 1e-14));
    CHECK_THAT(qos_threshold_24_vs_13(1.0, 100.0), WithinAbs(6.07564349717102127690, 1e-13));
    CHECK(qos_threshold_24_vs_13(1e-9, 1.0) < 1e-17);
    CHECK_THAT(qos_threshold_24_vs_13(1e9, 1.0), WithinAbs(std::log2(2e9 / 3.0), 1e-6));

    SECTION("ordering flips at the threshold")
    {
        splitmix64 g(24);
        for (int i = 0; i < 500; ++i)
        {
            const double x = log_uniform(g, 1e-2, 1e6);
            const double rho = log_uniform(g, 1.0, 1e12);
            const auto gains = profile_gains({profile_kind::arithmetic, 4}, x / rho);
            const double t = qos_threshold_24_vs_13(gains.gain(4), rho);
            for (double f : {0.99, 1.01})
            {
                const auto obj = selection_objective::qos_aware(t * f);
                const auto a = evaluate_pair({2, 4}, gains, rho, obj);
                const auto b = evaluate_pair({1, 3}, gains, rho, obj);
                REQUIRE(a.feasible);
                REQUIRE(b.feasible);
                if (f < 1.0)
                    REQUIRE(a.strong_secrecy > b.strong_secrecy);
                else
                    REQUIRE(a.strong_secrecy < b.strong_secrecy);
            }
        }
    }
}

TEST_CASE("ranking invariants", "[pairing][property]")
{
    splitmix64 g(25);
    for (int i = 0; i < 500; ++i)
    {
        const int n = 2 + static_cast<int>(uniform_index(g, 7));
        const auto gains = random_sorted(g, n);
        const double rho = log_uniform(g, 1e2, 1e12);
        const double r_th = log_uniform(g, 1e-3, 20.0);
        const auto obj = selection_objective::qos_aware(r_th);
        const auto ranked = rank_pairs(gains, rho, obj);

        auto pairs = order_of(ranked);
        std::sort(pairs.begin(), pairs.end());
        REQUIRE(pairs == enumerate_pairs(n));

        bool seen_infeasible = false;
        for (std::size_t k = 0; k < ranked.size(); ++k)
        {
            const auto &m = ranked[k];
            if (m.feasible)
            {
                REQUIRE_FALSE(seen_infeasible);
                REQUIRE(m.weak_rate >= r_th - 1e-9);
                REQUIRE(m.strong_secrecy > 0.0);
            }
            else
            {
                seen_infeasible = true;
                REQUIRE(m.strong_secrecy == 0.0);
                REQUIRE(m.weak_rate == 0.0);
                REQUIRE_FALSE(m.split);
            }
            if (k > 0)
                REQUIRE_FALSE(ranks_before(m, ranked[k - 1], obj.kind()));
        }
    }
}
