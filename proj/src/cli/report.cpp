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

#include <json.hpp>

#include <ostream>

namespace noma::cli
{
    namespace
    {
        using json = nlohmann::ordered_json;

        void write_header(std::ostream &os, std::string_view command, const options &opts)
        {
            if (opts.format == output_format::csv)
            {
                os << "# command=" << command << '\n';
                for (const auto &[k, v] : effective_settings(opts))
                    os << "# " << k << '=' << v << '\n';
                return;
            }
            json cfg = {{"kind", "config"}, {"command", command}};
            for (const auto &[k, v] : effective_settings(opts))
                cfg["settings"][k] = v;
            os << cfg.dump() << '\n';
        }

        std::string opt_field(const std::optional<double> &v)
        {
            return v ? format_double(*v) : std::string{};
        }

        json opt_json(const std::optional<double> &v)
        {
            return v ? json(*v) : json(nullptr);
        }
    }

    void write_simulation_report(std::ostream &os, std::string_view command, const options &opts, const simulation_result &r)
    {
        write_header(os, command, opts);
        const auto best = r.most_frequent_best();

        if (opts.format == output_format::csv)
        {
            os << "kind,pair,avg_strong_secrecy,avg_weak_rate,feasibility_fraction,win_frequency,strong_secrecy_std_error,"
                  "optimal_avg,random_avg,improvement_percent,n_trials,n_trials_effective\n";
            for (const auto &[pair, avg] : r.per_pair_avg)
            {
                os << "pair," << pair_id(pair) << ',' << format_double(avg.avg_strong_secrecy) << ','
                   << format_double(avg.avg_weak_rate) << ',' << format_double(avg.feasibility_fraction) << ','
                   << format_double(r.best_pair_frequency.at(pair)) << ',' << format_double(avg.strong_secrecy_std_error)
                   << ",,,,,\n";
            }
            os << "summary," << pair_id(best) << ",,,," << format_double(r.best_pair_frequency.at(best)) << ",,"
               << format_double(r.optimal_avg_secrecy) << ',' << format_double(r.random_avg_secrecy) << ','
               << opt_field(r.improvement_percent) << ',' << r.n_trials << ',' << r.n_trials_effective << '\n';
            return;
        }

        for (const auto &[pair, avg] : r.per_pair_avg)
        {
            json j = {
                {"kind", "pair"},
                {"pair", pair_id(pair)},
                {"avg_strong_secrecy", avg.avg_strong_secrecy},
                {"avg_weak_rate", avg.avg_weak_rate},
                {"feasibility_fraction", avg.feasibility_fraction},
                {"win_frequency", r.best_pair_frequency.at(pair)},
                {"strong_secrecy_std_error", avg.strong_secrecy_std_error},
            };
            os << j.dump() << '\n';
        }
        json s = {
            {"kind", "summary"},
            {"pair", pair_id(best)},
            {"win_frequency", r.best_pair_frequency.at(best)},
            {"optimal_avg", r.optimal_avg_secrecy},
            {"random_avg", r.random_avg_secrecy},
            {"improvement_percent", opt_json(r.improvement_percent)},
            {"n_trials", r.n_trials},
            {"n_trials_effective", r.n_trials_effective},
        };
        os << s.dump() << '\n';
    }

    void write_sweep_report(std::ostream &os, const options &opts, sweep_param param, const std::vector<sweep_point> &points)
    {
        write_header(os, "sweep", opts);
        const auto name = to_string(param);

        if (opts.format == output_format::csv)
            os << "sweep_param,sweep_value,pair,avg_strong_secrecy,avg_weak_rate,feasibility_fraction\n";

        for (const auto &pt : points)
        {
            for (const auto &[pair, avg] : pt.result.per_pair_avg)
            {
                if (opts.format == output_format::csv)
                {
                    os << name << ',' << format_double(pt.value) << ',' << pair_id(pair) << ','
                       << format_double(avg.avg_strong_secrecy) << ',' << format_double(avg.avg_weak_rate) << ','
                       << format_double(avg.feasibility_fraction) << '\n';
                }
                else
                {
                    json j = {
                        {"sweep_param", name},
                        {"sweep_value", pt.value},
                        {"pair", pair_id(pair)},
                        {"avg_strong_secrecy", avg.avg_strong_secrecy},
                        {"avg_weak_rate", avg.avg_weak_rate},
                        {"feasibility_fraction", avg.feasibility_fraction},
                    };
                    os << j.dump() << '\n';
                }
            }
        }
    }

    void write_ranking(std::ostream &os, std::string_view command, const options &opts, const std::vector<pair_metrics> &ranked)
    {
        write_header(os, command, opts);
        if (opts.format == output_format::csv)
            os << "rank,pair,alpha_m,alpha_n,strong_secrecy,weak_rate,feasible\n";

        for (std::size_t i = 0; i < ranked.size(); ++i)
        {
            const auto &m = ranked[i];
            if (opts.format == output_format::csv)
            {
                os << i + 1 << ',' << pair_id(m.pair) << ',';
                if (m.split)
                    os << format_double(m.split->alpha_m()) << ',' << format_double(m.split->alpha_n());
                else
                    os << ',';
                os << ',' << format_double(m.strong_secrecy) << ',' << format_double(m.weak_rate) << ','
                   << (m.feasible ? "true" : "false") << '\n';
            }
            else
            {
                json j = {
                    {"rank", i + 1},
                    {"pair", pair_id(m.pair)},
                    {"alpha_m", m.split ? json(m.split->alpha_m()) : json(nullptr)},
                    {"alpha_n", m.split ? json(m.split->alpha_n()) : json(nullptr)},
                    {"strong_secrecy", m.strong_secrecy},
                    {"weak_rate", m.weak_rate},
                    {"feasible", m.feasible},
                };
                os << j.dump() << '\n';
            }
        }
    }
}
