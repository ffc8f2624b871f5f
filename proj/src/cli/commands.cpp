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


#include "noma/cli.hpp"
#include "noma/errors.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace noma::cli
{
    namespace
    {
        class io_error : public std::runtime_error
        {
        public:
            using std::runtime_error::runtime_error;
        };

        std::string read_file(const std::string &path)
        {
            std::ifstream in(path, std::ios::binary);
            if (!in)
                throw io_error(fmt::format("cannot open config file '{}'", path));
            std::ostringstream ss;
            ss << in.rdbuf();
            return ss.str();
        }

        // Report goes to --out when given (summary echoed on stdout), else stdout.
        void emit(const options &o, std::ostream &out, const std::string &report, const std::string &summary)
        {
            if (o.out_path.empty())
            {
                out << report;
                return;
            }
            std::ofstream f(o.out_path, std::ios::binary | std::ios::trunc);
            if (!f)
                throw io_error(fmt::format("cannot open output file '{}'", o.out_path));
            f << report;
            f.flush();
            if (!f)
                throw io_error(fmt::format("failed writing output file '{}'", o.out_path));
            out << summary;
        }

        user_pair parse_pair(const std::string &text)
        {
            const auto comma = text.find(',');
            if (comma == std::string::npos)
                throw config_error(fmt::format("--pair: expected m,n, got '{}'", text));
            auto to_int = [&](std::string_view s) {
                int v = 0;
                const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
                if (ec != std::errc{} || ptr != s.data() + s.size())
                    throw config_error(fmt::format("--pair: expected m,n, got '{}'", text));
                return v;
            };
            const user_pair p{to_int(std::string_view(text).substr(0, comma)), to_int(std::string_view(text).substr(comma + 1))};
            if (p.m < 1 || p.m >= p.n)
                throw config_error(fmt::format("--pair: need 1 <= m < n, got '{}'", text));
            return p;
        }

        channel_gains resolve_gains(const options &o)
        {
            try
            {
                if (o.gains)
                    return channel_gains(*o.gains, gain_source::explicit_values);

                const int n = static_cast<int>(o.params.n_users());
                switch (o.mode)
                {
                case channel_mode::profile_arithmetic:
                case channel_mode::profile_harmonic:
                {
                    const auto kind = o.mode == channel_mode::profile_arithmetic ? profile_kind::arithmetic : profile_kind::harmonic;
                    const double base = o.base_gain ? *o.base_gain : profile_anchor_mean(kind, o.params);
                    return profile_gains({kind, n}, base);
                }
                case channel_mode::iid_sorted:
                    return sample_gains(o.params, o.seed);
                }
            }
            catch (const domain_error &e)
            {
                throw config_error(e.what());
            }
            throw config_error("unknown channel mode");
        }

        int cmd_alpha(const options &o, std::ostream &out, std::ostream &err)
        {
            const double rho = o.effective_rho_t();
            double gain_n = 0.0;
            if (o.gain_n)
                gain_n = *o.gain_n;
            else if (o.distance_n)
                gain_n = mean_gain(*o.distance_n, o.params);
            else
                throw config_error("alpha: --gain-n or --distance-n is required");

            std::optional<double> gain_m = o.gain_m;
            if (!gain_m && o.distance_m)
                gain_m = mean_gain(*o.distance_m, o.params);
            if (gain_m && !(*gain_m > gain_n))
                throw config_error("alpha: the strong user's gain must exceed the weak user's");

            const double upper = rth_upper_bound(gain_n, rho);
            out << "gain_n=" << format_double(gain_n) << '\n'
                << "rho_t=" << format_double(rho) << '\n'
                << "rth=" << format_double(o.r_th) << '\n'
                << "rth_range=(0," << format_double(upper) << ")\n";

            std::optional<power_split> split;
            if (o.r_th > 0.0)
            {
                try
                {
                    split = optimal_alpha(gain_n, rho, qos_target(o.r_th));
                }
                catch (const infeasible_qos &)
                {
                }
            }
            if (!split)
            {
                out << "feasible=false\n";
                err << fmt::format("infeasible: R_th = {} must satisfy 0 < R_th < {}\n", format_double(o.r_th), format_double(upper));
                return exit_infeasible;
            }

            out << "feasible=true\n"
                << "alpha_m=" << format_double(split->alpha_m()) << '\n'
                << "alpha_n=" << format_double(split->alpha_n()) << '\n'
                << "weak_rate=" << format_double(weak_user_rate(gain_n, *split, rho)) << '\n';
            if (gain_m)
                out << "gain_m=" << format_double(*gain_m) << '\n'
                    << "strong_secrecy=" << format_double(secrecy_rate_strong(*gain_m, gain_n, *split, rho)) << '\n';
            return exit_ok;
        }

        int cmd_rank(const options &o, std::ostream &out)
        {
            const auto gains = resolve_gains(o);
            const auto ranked = rank_pairs(gains, o.effective_rho_t(), o.make_objective());
            std::ostringstream report;
            write_ranking(report, "rank", o, ranked);
            emit(o, out, report.str(), fmt::format("best={}\n", to_string(ranked.front().pair)));
            return exit_ok;
        }

        int cmd_select(const options &o, std::ostream &out)
        {
            const auto gains = resolve_gains(o);
            const auto best = select_best_pair(gains, o.effective_rho_t(), o.make_objective());
            std::ostringstream report;
            write_ranking(report, "select", o, {best});
            emit(o, out, report.str(), fmt::format("best={}\n", to_string(best.pair)));
            return exit_ok;
        }

        int cmd_compare(const options &o, const std::vector<std::string> &pair_args, std::ostream &out)
        {
            if (pair_args.size() != 2)
                throw config_error("compare: exactly two --pair arguments are required");
            const user_pair a = parse_pair(pair_args[0]);
            const user_pair b = parse_pair(pair_args[1]);
            if (a == b)
                throw config_error("compare: the two pairs must differ");

            const auto gains = resolve_gains(o);
            const double rho = o.effective_rho_t();
            const auto kind = o.objective;

            std::vector<double> thresholds = {o.r_th};
            if (kind == objective_kind::qos_aware_secrecy && !o.sweep_values.empty())
                thresholds = o.sweep_values;

            std::ostringstream report;
            std::ostringstream summary;
            if (o.format == output_format::csv)
            {
                report << "# command=compare\n";
                for (const auto &[k, v] : effective_settings(o))
                    report << "# " << k << '=' << v << '\n';
            }

            // Closed-form flip point for the (2,4) vs (1,3) comparison.
            const bool closed_form = gains.source() == gain_source::profile_arithmetic && gains.size() == 4 &&
                                     kind == objective_kind::qos_aware_secrecy &&
                                     std::min(a, b) == user_pair{1, 3} && std::max(a, b) == user_pair{2, 4};
            std::optional<double> threshold;
            if (closed_form)
            {
                threshold = qos_threshold_24_vs_13(gains.gain(4), rho);
                summary << "threshold_24_vs_13=" << format_double(*threshold) << '\n';
                if (o.format == output_format::csv)
                    report << "# threshold_24_vs_13=" << format_double(*threshold) << '\n';
            }
            if (o.format == output_format::csv)
                report << "rth,pair_a,pair_b,score_a,score_b,feasible_a,feasible_b,winner\n";

            std::optional<user_pair> previous;
            double previous_rth = 0.0;
            for (double r : thresholds)
            {
                options point = o;
                point.r_th = r;
                const auto objective = point.make_objective();
                const auto ma = evaluate_pair(a, gains, rho, objective);
                const auto mb = evaluate_pair(b, gains, rho, objective);
                const double sa = objective_score(ma, kind);
                const double sb = objective_score(mb, kind);
                const bool tie = ma.feasible == mb.feasible && sa == sb;
                const std::string winner = tie ? "tie" : pair_id(ranks_before(ma, mb, kind) ? a : b);

                if (o.format == output_format::csv)
                {
                    report << format_double(r) << ',' << pair_id(a) << ',' << pair_id(b) << ',' << format_double(sa) << ','
                           << format_double(sb) << ',' << (ma.feasible ? "true" : "false") << ','
                           << (mb.feasible ? "true" : "false") << ',' << winner << '\n';
                }
                else
                {
                    report << fmt::format(R"({{"rth":{},"pair_a":"{}","pair_b":"{}","score_a":{},"score_b":{},"feasible_a":{},"feasible_b":{},"winner":"{}"}})",
                                          format_double(r), pair_id(a), pair_id(b), format_double(sa), format_double(sb),
                                          ma.feasible, mb.feasible, winner)
                           << '\n';
                }

                if (!tie)
                {
                    const user_pair w = ranks_before(ma, mb, kind) ? a : b;
                    if (previous && *previous != w)
                        summary << fmt::format("ordering flips between rth={} ({} better) and rth={} ({} better)\n",
                                               format_double(previous_rth), to_string(*previous), format_double(r), to_string(w));
                    previous = w;
                    previous_rth = r;
                }
            }

            if (o.out_path.empty())
                out << report.str() << summary.str();
            else
                emit(o, out, report.str(), summary.str());
            return exit_ok;
        }

        std::string summary_line(const simulation_result &r)
        {
            const auto best = r.most_frequent_best();
            return fmt::format("best={} win_frequency={} optimal_avg={} random_avg={} improvement_percent={}\n", to_string(best),
                               format_double(r.best_pair_frequency.at(best)), format_double(r.optimal_avg_secrecy),
                               format_double(r.random_avg_secrecy),
                               r.improvement_percent ? format_double(*r.improvement_percent) : std::string("n/a"));
        }

        int cmd_simulate(const options &o, std::ostream &out)
        {
            const auto result = run_simulation(o.make_simulation(false));
            std::ostringstream report;
            write_simulation_report(report, "simulate", o, result);
            emit(o, out, report.str(), summary_line(result));
            return exit_ok;
        }

        int cmd_sweep(const options &o, std::ostream &out)
        {
            if (o.sweep_values.empty())
                throw config_error("sweep: --sweep-values must list at least one value");
            const auto cfg = o.make_simulation(true);
            const auto points = sweep_run(cfg);

            options echo = o;
            echo.sweep_on = cfg.sweep->param;
            std::ostringstream report;
            write_sweep_report(report, echo, cfg.sweep->param, points);
            emit(echo, out, report.str(), fmt::format("sweep points={}\n", points.size()));
            return exit_ok;
        }

        struct binding
        {
            CLI::Option *option;
            std::string key;
        };
    }

    int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
    {
        CLI::App app{"Secrecy-rate power allocation and user-pair selection for untrusted downlink NOMA"};
        app.name(args.empty() ? "noma-sim" : args.front());
        app.require_subcommand(1, 1);

        std::map<std::string, std::string> raw;
        std::vector<binding> bindings;
        std::string config_path;
        std::vector<std::string> pair_args;

        auto bind = [&](CLI::App *sub, const std::string &flag, const std::string &key, const std::string &help) {
            bindings.push_back({sub->add_option(flag, raw[key], help), key});
        };

        auto add_common = [&](CLI::App *sub) {
            sub->add_option("--config", config_path, "Flat key = value config file");
            bind(sub, "--trials", "trials", "Monte Carlo realizations");
            bind(sub, "--seed", "seed", "Master seed (falls back to NOMA_SIM_SEED)");
            bind(sub, "--objective", "objective", "strong-secrecy | weak-rate | qos");
            bind(sub, "--rth", "rth", "Weak-user QoS target R_th in bits/s/Hz");
            bind(sub, "--channel-mode", "channel_mode", "arith | harmonic | iid");
            bind(sub, "--distances", "distances_m", "Comma-separated user distances in m");
            bind(sub, "--pt-watts", "transmit_power_watts", "Transmit power in W");
            bind(sub, "--pt-dbm", "transmit_power_dbm", "Transmit power in dBm");
            bind(sub, "--noise-watts", "noise_power_watts", "Noise power in W");
            bind(sub, "--noise-dbm", "noise_power_dbm", "Noise power in dBm");
            bind(sub, "--lp", "path_loss_constant", "Path-loss constant L_p");
            bind(sub, "--ple", "path_loss_exponent", "Path-loss exponent e");
            bind(sub, "--baseline", "baseline", "Random-pairing baseline: uniform | feasible");
            bind(sub, "--threads", "threads", "Worker threads (0 = all cores)");
            bind(sub, "--sweep-param", "sweep_param", "r_th | transmit_power_watts");
            bind(sub, "--sweep-values", "sweep_values", "Comma-separated sweep values");
            bind(sub, "--gains", "gains", "Explicit descending channel gains");
            bind(sub, "--base-gain", "base_gain", "Profile anchor gain (|h_N|^2 arith, |h_1|^2 harmonic)");
            bind(sub, "--rho-t", "rho_t", "Transmit SNR override for single-shot commands");
            bind(sub, "--out", "out", "Output file (default stdout)");
            bind(sub, "--format", "format", "csv | jsonl");
        };

        auto *alpha = app.add_subcommand("alpha", "Optimal power split for one pair");
        auto *rank = app.add_subcommand("rank", "Rank all pairs of one channel realization");
        auto *select = app.add_subcommand("select", "Best pair of one channel realization");
        auto *simulate = app.add_subcommand("simulate", "Monte Carlo pair statistics");
        auto *sweep = app.add_subcommand("sweep", "Monte Carlo over a parameter sweep");
        auto *compare = app.add_subcommand("compare", "Compare two pairs, optionally over a list of R_th");
        for (auto *sub : {alpha, rank, select, simulate, sweep, compare})
            add_common(sub);
        bind(alpha, "--gain-n", "gain_n", "Weak user's channel gain");
        bind(alpha, "--gain-m", "gain_m", "Strong user's channel gain");
        bind(alpha, "--distance-n", "distance_n", "Weak user's distance in m");
        bind(alpha, "--distance-m", "distance_m", "Strong user's distance in m");
        compare->add_option("--pair", pair_args, "Pair m,n (give twice)");

        std::vector<const char *> argv;
        argv.reserve(args.size() + 1);
        if (args.empty())
            argv.push_back("noma-sim");
        for (const auto &a : args)
            argv.push_back(a.c_str());

        try
        {
            app.parse(static_cast<int>(argv.size()), argv.data());
        }
        catch (const CLI::ParseError &e)
        {
            return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
        }

        CLI::App *active = app.get_subcommands().front();
        try
        {
            options o;
            if (const char *env = std::getenv("NOMA_SIM_SEED"); env && *env)
                apply_setting(o, "seed", env);
            if (!config_path.empty())
                for (const auto &[k, v] : parse_config_text(read_file(config_path)))
                    apply_setting(o, k, v);
            for (const auto &b : bindings)
                if (b.option->count() > 0)
                    apply_setting(o, b.key, raw[b.key]);

            if (active == alpha)
                return cmd_alpha(o, out, err);
            if (active == rank)
                return cmd_rank(o, out);
            if (active == select)
                return cmd_select(o, out);
            if (active == simulate)
                return cmd_simulate(o, out);
            if (active == sweep)
                return cmd_sweep(o, out);
            return cmd_compare(o, pair_args, out);
        }
        catch (const infeasible_qos &e)
        {
            err << "infeasible: " << e.what() << '\n';
            return exit_infeasible;
        }
        catch (const no_feasible_pair &e)
        {
            err << "infeasible: " << e.what() << '\n';
            return exit_infeasible;
        }
        catch (const degenerate_result &e)
        {
            err << "infeasible: " << e.what() << '\n';
            return exit_infeasible;
        }
        catch (const config_error &e)
        {
            err << "error: " << e.what() << "\n\n" << active->help();
            return exit_usage;
        }
        catch (const domain_error &e)
        {
            err << "error: " << e.what() << "\n\n" << active->help();
            return exit_usage;
        }
        catch (const io_error &e)
        {
            err << "error: " << e.what() << '\n';
            return exit_usage;
        }
    }
}
