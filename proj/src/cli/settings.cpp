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

#include <fmt/format.h>

#include <charconv>
#include <cmath>
#include <limits>
#include <string>

namespace noma::cli
{
    namespace
    {
        std::string_view trim(std::string_view s)
        {
            const auto first = s.find_first_not_of(" \t\r");
            if (first == std::string_view::npos)
                return {};
            const auto last = s.find_last_not_of(" \t\r");
            return s.substr(first, last - first + 1);
        }

        double parse_real(std::string_view key, std::string_view text)
        {
            text = trim(text);
            double v = 0.0;
            const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
            if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty() || !std::isfinite(v))
                throw config_error(fmt::format("{}: '{}' is not a finite number", key, text));
            return v;
        }

        double parse_positive(std::string_view key, std::string_view text)
        {
            const double v = parse_real(key, text);
            if (!(v > 0.0))
                throw config_error(fmt::format("{}: must be positive, got {}", key, text));
            return v;
        }

        std::uint64_t parse_unsigned(std::string_view key, std::string_view text)
        {
            text = trim(text);
            std::uint64_t v = 0;
            const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
            if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
                throw config_error(fmt::format("{}: '{}' is not a non-negative integer", key, text));
            return v;
        }

        std::vector<double> parse_list(std::string_view key, std::string_view text, bool allow_empty)
        {
            std::vector<double> out;
            text = trim(text);
            while (!text.empty())
            {
                const auto comma = text.find(',');
                out.push_back(parse_positive(key, text.substr(0, comma)));
                if (comma == std::string_view::npos)
                    break;
                text = text.substr(comma + 1);
                if (trim(text).empty())
                    throw config_error(fmt::format("{}: trailing comma", key));
            }
            if (out.empty() && !allow_empty)
                throw config_error(fmt::format("{}: list must not be empty", key));
            return out;
        }

        std::string join(const std::vector<double> &v)
        {
            std::string s;
            for (std::size_t i = 0; i < v.size(); ++i)
            {
                if (i)
                    s += ',';
                s += format_double(v[i]);
            }
            return s;
        }

        std::string_view objective_name(objective_kind k)
        {
            switch (k)
            {
            case objective_kind::max_strong_secrecy:
                return "strong-secrecy";
            case objective_kind::max_weak_rate:
                return "weak-rate";
            case objective_kind::qos_aware_secrecy:
                return "qos";
            }
            return "unknown";
        }
    }

    std::string format_double(double v)
    {
        return fmt::format("{:.17g}", v);
    }

    std::string pair_id(const user_pair &p)
    {
        return fmt::format("{}-{}", p.m, p.n);
    }

    selection_objective options::make_objective() const
    {
        switch (objective)
        {
        case objective_kind::max_strong_secrecy:
            return selection_objective::max_strong_secrecy();
        case objective_kind::max_weak_rate:
            return selection_objective::max_weak_rate();
        case objective_kind::qos_aware_secrecy:
            break;
        }
        if (!(r_th > 0.0))
            throw infeasible_qos(r_th, std::numeric_limits<double>::infinity());
        return selection_objective::qos_aware(r_th);
    }

    simulation_config options::make_simulation(bool with_sweep) const
    {
        simulation_config c;
        c.params = params;
        c.n_trials = trials;
        c.seed = seed;
        c.objective = make_objective();
        c.mode = mode;
        c.baseline = baseline;
        c.threads = threads;
        if (with_sweep)
            c.sweep = sweep_spec{sweep_on.value_or(sweep_param::r_th), sweep_values};
        try
        {
            c.validate();
        }
        catch (const domain_error &e)
        {
            throw config_error(e.what());
        }
        return c;
    }

    std::vector<setting> parse_config_text(std::string_view text)
    {
        std::vector<setting> out;
        std::size_t line_no = 0;
        while (!text.empty())
        {
            ++line_no;
            const auto eol = text.find('\n');
            std::string_view line = text.substr(0, eol);
            text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

            if (const auto hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            line = trim(line);
            if (line.empty())
                continue;

            const auto eq = line.find('=');
            if (eq == std::string_view::npos)
                throw config_error(fmt::format("config line {}: expected key = value", line_no));
            const auto key = trim(line.substr(0, eq));
            if (key.empty())
                throw config_error(fmt::format("config line {}: empty key", line_no));
            out.emplace_back(std::string(key), std::string(trim(line.substr(eq + 1))));
        }
        return out;
    }

    void apply_setting(options &o, std::string_view key, std::string_view raw)
    {
        const auto value = trim(raw);
        auto &p = o.params;

        if (key == "transmit_power_watts")
            p.transmit_power_watts = parse_positive(key, value);
        else if (key == "transmit_power_dbm")
            p.transmit_power_watts = dbm_to_watts(parse_real(key, value));
        else if (key == "noise_power_watts")
            p.noise_power_watts = parse_positive(key, value);
        else if (key == "noise_power_dbm")
            p.noise_power_watts = dbm_to_watts(parse_real(key, value));
        else if (key == "path_loss_constant")
            p.path_loss_constant = parse_positive(key, value);
        else if (key == "path_loss_exponent")
            p.path_loss_exponent = parse_positive(key, value);
        else if (key == "distances_m")
        {
            p.distances_m = parse_list(key, value, false);
            if (p.distances_m.size() < 2)
                throw config_error("distances_m: at least two users are required");
        }
        else if (key == "trials")
        {
            o.trials = parse_unsigned(key, value);
            if (o.trials == 0)
                throw config_error("trials: must be at least 1");
        }
        else if (key == "seed")
            o.seed = parse_unsigned(key, value);
        else if (key == "objective")
        {
            if (value == "strong-secrecy")
                o.objective = objective_kind::max_strong_secrecy;
            else if (value == "weak-rate")
                o.objective = objective_kind::max_weak_rate;
            else if (value == "qos")
                o.objective = objective_kind::qos_aware_secrecy;
            else
                throw config_error(fmt::format("objective: expected strong-secrecy, weak-rate or qos, got '{}'", value));
        }
        else if (key == "rth")
            o.r_th = parse_real(key, value);
        else if (key == "channel_mode")
        {
            if (value == "arith")
                o.mode = channel_mode::profile_arithmetic;
            else if (value == "harmonic")
                o.mode = channel_mode::profile_harmonic;
            else if (value == "iid")
                o.mode = channel_mode::iid_sorted;
            else
                throw config_error(fmt::format("channel_mode: expected arith, harmonic or iid, got '{}'", value));
        }
        else if (key == "baseline")
        {
            if (value == "uniform")
                o.baseline = baseline_policy::uniform_all;
            else if (value == "feasible")
                o.baseline = baseline_policy::feasible_only;
            else
                throw config_error(fmt::format("baseline: expected uniform or feasible, got '{}'", value));
        }
        else if (key == "threads")
            o.threads = static_cast<unsigned>(parse_unsigned(key, value));
        else if (key == "sweep_param")
        {
            if (value == "r_th" || value == "rth")
                o.sweep_on = sweep_param::r_th;
            else if (value == "transmit_power_watts")
                o.sweep_on = sweep_param::transmit_power_watts;
            else
                throw config_error(fmt::format("sweep_param: expected r_th or transmit_power_watts, got '{}'", value));
        }
        else if (key == "sweep_values")
            o.sweep_values = parse_list(key, value, true);
        else if (key == "format")
        {
            if (value == "csv")
                o.format = output_format::csv;
            else if (value == "jsonl")
                o.format = output_format::jsonl;
            else
                throw config_error(fmt::format("format: expected csv or jsonl, got '{}'", value));
        }
        else if (key == "out")
            o.out_path = std::string(value);
        else if (key == "gains")
            o.gains = parse_list(key, value, false);
        else if (key == "base_gain")
            o.base_gain = parse_positive(key, value);
        else if (key == "rho_t")
            o.rho_t = parse_positive(key, value);
        else if (key == "gain_n")
            o.gain_n = parse_positive(key, value);
        else if (key == "gain_m")
            o.gain_m = parse_positive(key, value);
        else if (key == "distance_n")
            o.distance_n = parse_positive(key, value);
        else if (key == "distance_m")
            o.distance_m = parse_positive(key, value);
        else
            throw config_error(fmt::format("unknown setting '{}'", key));
    }

    std::vector<setting> effective_settings(const options &o)
    {
        const auto &p = o.params;
        std::vector<setting> s = {
            {"transmit_power_watts", format_double(p.transmit_power_watts)},
            {"noise_power_watts", format_double(p.noise_power_watts)},
            {"path_loss_constant", format_double(p.path_loss_constant)},
            {"path_loss_exponent", format_double(p.path_loss_exponent)},
            {"distances_m", join(p.distances_m)},
            {"trials", std::to_string(o.trials)},
            {"seed", std::to_string(o.seed)},
            {"objective", std::string(objective_name(o.objective))},
            {"rth", format_double(o.r_th)},
            {"channel_mode", std::string(to_string(o.mode))},
            {"baseline", std::string(to_string(o.baseline))},
        };
        if (o.sweep_on)
        {
            s.emplace_back("sweep_param", std::string(to_string(*o.sweep_on)));
            s.emplace_back("sweep_values", join(o.sweep_values));
        }
        if (o.rho_t)
            s.emplace_back("rho_t", format_double(*o.rho_t));
        if (o.gains)
            s.emplace_back("gains", join(*o.gains));
        if (o.base_gain)
            s.emplace_back("base_gain", format_double(*o.base_gain));
        if (o.gain_n)
            s.emplace_back("gain_n", format_double(*o.gain_n));
        if (o.gain_m)
            s.emplace_back("gain_m", format_double(*o.gain_m));
        if (o.distance_n)
            s.emplace_back("distance_n", format_double(*o.distance_n));
        if (o.distance_m)
            s.emplace_back("distance_m", format_double(*o.distance_m));
        return s;
    }
}
