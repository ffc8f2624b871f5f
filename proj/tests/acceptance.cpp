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


// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit status
// when any criterion fails.

#include "noma/core.hpp"
#include "noma/errors.hpp"
#include "noma/montecarlo.hpp"
#include "noma/pairing.hpp"
#include "noma/rng.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace noma;

namespace
{
    struct verdict
    {
        bool pass;
        std::string detail;
    };

    int failures = 0;

    void criterion(int id, const char *title, const std::function<verdict()> &body)
    {
        const auto start = std::chrono::steady_clock::now();
        verdict v{false, "exception"};
        try
        {
            v = body();
        }
        catch (const std::exception &e)
        {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %d: %s [%s] (%.2f s)\n", v.pass ? "PASS" : "FAIL", id, title, v.detail.c_str(), secs);
        std::fflush(stdout);
        failures += v.pass ? 0 : 1;
    }

    double log_uniform(splitmix64 &g, double lo, double hi)
    {
        return std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * uniform_open01(g));
    }

    double uniform(splitmix64 &g, double lo, double hi)
    {
        return lo + (hi - lo) * uniform_open01(g);
    }

    double elapsed_since(std::chrono::steady_clock::time_point t)
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
    }

    std::string num(double v)
    {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.6g", v);
        return buf;
    }

    std::vector<user_pair> order_of(const std::vector<pair_metrics> &ranked)
    {
        std::vector<user_pair> out;
        for (const auto &m : ranked)
            out.push_back(m.pair);
        return out;
    }

    verdict profile_order(profile_kind kind, const std::vector<user_pair> &expected, std::uint64_t seed)
    {
        splitmix64 g(seed);
        int violations = 0;
        const int draws = 100;
        for (int i = 0; i < draws; ++i)
        {
            const double base = log_uniform(g, 1e-10, 1e-2);
            const double rho = log_uniform(g, 1e-2, 1e14);
            const auto gains = profile_gains({kind, 4}, base);
            if (order_of(rank_pairs(gains, rho, selection_objective::max_strong_secrecy())) != expected)
                ++violations;
        }
        return {violations == 0, std::to_string(draws) + " draws, " + std::to_string(violations) + " violations"};
    }

    simulation_config default_config()
    {
        simulation_config c; // P_t = 1 mW, noise -120 dBm, L_p = 1, e = 3, R_th = 0.5, 1e5 trials, seed 1
        return c;
    }
}

int main()
{
    criterion(1, "closed-form alpha vs constrained grid search", [] {
        splitmix64 g(101);
        int bad_value = 0;
        int bad_rate = 0;
        double worst_rate = 0.0;
        const int n = 1000;
        const double step = 1e-5;
        const auto start = std::chrono::steady_clock::now();
        for (int i = 0; i < n; ++i)
        {
            const double xn = log_uniform(g, 0.1, 1e6);
            const double xm = xn * log_uniform(g, 1.01, 100.0);
            const double upper = rth_upper_bound(xn, 1.0);
            double r_th = 0.0;
            while (!(r_th > 0.0 && r_th < upper))
                r_th = uniform(g, 0.0, upper);

            const auto split = optimal_alpha(xn, 1.0, qos_target(r_th));
            const double a = split.alpha_m();
            const double closed = secrecy_rate_strong(xm, xn, split, 1.0);
            const double one_step = static_cast<double>(oracle::secrecy(xm, xn, a) - oracle::secrecy(xm, xn, std::max(a - step, 0.0)));
            const auto grid = oracle::constrained_grid(xm, xn, r_th, step);
            const double grid_value = grid.found ? grid.value : 0.0;
            if (std::abs(closed - grid_value) > one_step + 1e-12)
                ++bad_value;
            const double dr = std::abs(weak_user_rate(xn, split, 1.0) - r_th);
            worst_rate = std::max(worst_rate, dr);
            if (dr > 1e-9)
                ++bad_rate;
        }
        const double secs = elapsed_since(start);
        return verdict{bad_value == 0 && bad_rate == 0 && secs < 30.0,
                       std::to_string(n) + " instances, " + std::to_string(bad_value) + " objective and " + std::to_string(bad_rate) +
                           " QoS violations, max |R_nn - R_th| = " + num(worst_rate)};
    });

    criterion(2, "arithmetic profile order (1,4),(2,4),(1,3),(3,4),(2,3),(1,2)",
              [] { return profile_order(profile_kind::arithmetic, {{1, 4}, {2, 4}, {1, 3}, {3, 4}, {2, 3}, {1, 2}}, 102); });

    criterion(3, "harmonic profile order (1,4),(1,3),(1,2),(2,4),(2,3),(3,4)",
              [] { return profile_order(profile_kind::harmonic, {{1, 4}, {1, 3}, {1, 2}, {2, 4}, {2, 3}, {3, 4}}, 103); });

    criterion(4, "weak-rate ranking groups {(1,2)} {(1,3),(2,3)} {(1,4),(2,4),(3,4)}", [] {
        splitmix64 g(104);
        int violations = 0;
        const int draws = 1000;
        auto tie = [](double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(std::abs(a), std::abs(b)); };
        for (int i = 0; i < draws; ++i)
        {
            std::vector<double> v;
            double x = log_uniform(g, 1e-8, 1e-2);
            for (int k = 0; k < 4; ++k)
            {
                v.push_back(x);
                x /= log_uniform(g, 1.0001, 100.0);
            }
            const channel_gains gains(v, gain_source::explicit_values);
            const double rho = log_uniform(g, 1e-2, 1e14);
            const auto all = evaluate_all_pairs(gains, rho, selection_objective::max_weak_rate());
            auto rate = [&](int m, int n) {
                for (const auto &p : all)
                    if (p.pair == user_pair{m, n})
                        return p.weak_rate;
                return -1.0;
            };
            const bool ok = tie(rate(1, 3), rate(2, 3)) && tie(rate(1, 4), rate(2, 4)) && tie(rate(2, 4), rate(3, 4)) &&
                            rate(1, 2) > rate(1, 3) && rate(2, 3) > rate(1, 4) &&
                            select_best_pair(gains, rho, selection_objective::max_weak_rate()).pair == user_pair{1, 2};
            violations += ok ? 0 : 1;
        }
        return verdict{violations == 0, std::to_string(draws) + " sorted gain sets, " + std::to_string(violations) + " violations"};
    });

    criterion(5, "(2,4) vs (1,3) QoS ordering flips at the closed-form threshold", [] {
        int violations = 0;
        std::string detail;
        for (double x : {0.5, 1.0, 10.0, 100.0})
        {
            const auto gains = profile_gains({profile_kind::arithmetic, 4}, x);
            const double t = qos_threshold_24_vs_13(gains.gain(4), 1.0);
            for (double f : {0.99, 1.01})
            {
                const auto obj = selection_objective::qos_aware(t * f);
                const auto a = evaluate_pair({2, 4}, gains, 1.0, obj);
                const auto b = evaluate_pair({1, 3}, gains, 1.0, obj);
                const bool expect_24 = f < 1.0;
                const bool ok = a.feasible && b.feasible && (expect_24 ? a.strong_secrecy > b.strong_secrecy : a.strong_secrecy < b.strong_secrecy);
                violations += ok ? 0 : 1;
            }
            detail += (detail.empty() ? "" : ", ") + std::string("x4=") + num(x) + " thr=" + num(t);
        }
        return verdict{violations == 0, detail + "; " + std::to_string(violations) + " violations"};
    });

    criterion(6, "best-pair frequencies at the default parameters, 1e5 trials", [] {
        const auto start = std::chrono::steady_clock::now();
        auto c = default_config();
        c.objective = selection_objective::max_strong_secrecy();
        const double f1 = run_simulation(c).best_pair_frequency.at({1, 4});
        c.objective = selection_objective::max_weak_rate();
        const double f2 = run_simulation(c).best_pair_frequency.at({1, 2});
        c.objective = selection_objective::qos_aware(0.5);
        const double f3 = run_simulation(c).best_pair_frequency.at({1, 4});
        const double secs = elapsed_since(start);
        return verdict{f1 == 1.0 && f2 == 1.0 && f3 == 1.0 && secs < 10.0,
                       "strong-secrecy (1,4)=" + num(f1) + ", weak-rate (1,2)=" + num(f2) + ", qos (1,4)=" + num(f3) + ", seed " +
                           std::to_string(c.seed)};
    });

    criterion(7, "optimal vs random pairing improvement at R_th = 0.5", [] {
        bool positive = true;
        std::string detail;
        double headline = 0.0;
        for (auto mode : {channel_mode::profile_arithmetic, channel_mode::profile_harmonic, channel_mode::iid_sorted})
            for (auto baseline : {baseline_policy::uniform_all, baseline_policy::feasible_only})
            {
                auto c = default_config();
                c.mode = mode;
                c.baseline = baseline;
                const auto r = run_simulation(c);
                const double imp = r.improvement_percent.value_or(0.0);
                positive = positive && r.improvement_percent && imp > 0.0;
                if (mode == channel_mode::profile_arithmetic && baseline == baseline_policy::uniform_all)
                    headline = imp;
                detail += (detail.empty() ? "" : ", ") + std::string(to_string(mode)) + "/" + std::string(to_string(baseline)) + "=" +
                          num(imp) + "%";
            }
        const bool in_band = headline >= 70.0 && headline <= 160.0;
        return verdict{positive && in_band, "default arith/uniform " + num(headline) + "% in [70,160]: " + (in_band ? "yes" : "no") + "; " + detail};
    });

    criterion(8, "derivatives match central finite differences", [] {
        splitmix64 g(108);
        const int n = 1000;
        const double h = 1e-6;
        double worst_s = 0.0;
        double worst_r = 0.0;
        double worst_g = 0.0;
        auto at = [](double a) { return power_split::from_strong(a); };
        for (int i = 0; i < n; ++i)
        {
            const double rho = log_uniform(g, 1e-2, 1e2);
            const double xn = log_uniform(g, 0.1, 1e3);
            const double gn = xn / rho;
            const double gm = gn * uniform(g, 1.1, 10.0);
            const double a = uniform(g, 0.05, 0.95);

            const double fd_s = oracle::central_difference([&](double x) { return secrecy_rate_strong(gm, gn, at(x), rho); }, a, h);
            const double fd_r = oracle::central_difference([&](double x) { return weak_user_rate(gn, at(x), rho); }, a, h);
            const double fd_g = oracle::central_difference([&](double x) { return static_cast<double>(oracle::weak_sinr(xn, x)); }, a, h);
            const double ds = secrecy_rate_derivative(gm, gn, at(a), rho);
            const double dr = weak_rate_derivative(gn, at(a), rho);
            const double dg = weak_sinr_derivative(gn, at(a), rho);
            worst_s = std::max(worst_s, std::abs(fd_s - ds) / std::abs(ds));
            worst_r = std::max(worst_r, std::abs(fd_r - dr) / std::abs(dr));
            worst_g = std::max(worst_g, std::abs(fd_g - dg) / std::abs(dg));
        }
        return verdict{worst_s <= 1e-6 && worst_r <= 1e-6 && worst_g <= 1e-6,
                       std::to_string(n) + " points each, max rel. error dR_s/da " + num(worst_s) + ", dR_nn/da " + num(worst_r) +
                           ", dGamma_nn/da " + num(worst_g)};
    });

    criterion(9, "averaged QoS-aware secrecy non-increasing over a 15-point R_th sweep", [] {
        auto c = default_config();
        double upper = INFINITY;
        for (double d : c.params.distances_m)
            upper = std::min(upper, rth_upper_bound(mean_gain(d, c.params), c.params.rho_t()));
        sweep_spec s{sweep_param::r_th, {}};
        for (int k = 1; k <= 15; ++k)
            s.values.push_back(upper * k / 16.0);
        c.sweep = s;
        const auto points = sweep_run(c);
        int violations = 0;
        for (std::size_t i = 1; i < points.size(); ++i)
            for (const auto &[pair, avg] : points[i].result.per_pair_avg)
                if (avg.avg_strong_secrecy > points[i - 1].result.per_pair_avg.at(pair).avg_strong_secrecy)
                    ++violations;
        return verdict{violations == 0, "R_th = k/16 * " + num(upper) + ", k = 1..15, 6 pairs, " + std::to_string(violations) + " violations"};
    });

    criterion(10, "strong user secrecy >= 0 and weak user secrecy <= 0", [] {
        splitmix64 g(110);
        int violations = 0;
        const int n = 10000;
        for (int i = 0; i < n; ++i)
        {
            const double rho = log_uniform(g, 1e-3, 1e13);
            const double gn = log_uniform(g, 1e-10, 1e1);
            const double gm = gn * log_uniform(g, 1.0 + 1e-9, 1e4);
            for (double a : {0.0, 0.25, 0.5, 0.75, 1.0})
            {
                const auto split = power_split::from_strong(a);
                const double s = secrecy_rate_strong(gm, gn, split, rho);
                const double w = secrecy_rate_weak(gm, gn, split, rho);
                const bool ok = s >= 0.0 && (a == 0.0 || s > 0.0) && w <= 0.0;
                violations += ok ? 0 : 1;
            }
        }
        return verdict{violations == 0, std::to_string(n) + " gain pairs x 5 splits, " + std::to_string(violations) + " violations"};
    });

    std::printf("%s: %d of 10 criteria failed\n", failures == 0 ? "PASS" : "FAIL", failures);
    return failures == 0 ? 0 : 1;
}
