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


#ifndef NOMA_CLI_HPP
#define NOMA_CLI_HPP

#include "noma/montecarlo.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace noma::cli
{
    // Malformed input: unknown key, unparsable number, impossible value.
    // Maps to exit code 1.
    class config_error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    enum class output_format
    {
        csv,
        jsonl,
    };

    enum exit_code : int
    {
        exit_ok = 0,
        exit_usage = 1,
        exit_infeasible = 2,
    };

    using setting = std::pair<std::string, std::string>;

    // Effective settings of one invocation. Layered as
    // defaults < NOMA_SIM_SEED < config file < command-line flags,
    // every layer going through apply_setting.
    struct options
    {
        system_params params;
        std::uint64_t trials = 100000;
        std::uint64_t seed = 1;
        objective_kind objective = objective_kind::qos_aware_secrecy;
        double r_th = 0.5;
        channel_mode mode = channel_mode::profile_arithmetic;
        baseline_policy baseline = baseline_policy::uniform_all;
        unsigned threads = 0;
        std::optional<sweep_param> sweep_on;
        std::vector<double> sweep_values;
        output_format format = output_format::csv;
        std::string out_path;

        // Single-shot inputs (alpha / rank / select / compare).
        std::optional<std::vector<double>> gains;
        std::optional<double> base_gain;
        std::optional<double> rho_t;
        std::optional<double> gain_n;
        std::optional<double> gain_m;
        std::optional<double> distance_n;
        std::optional<double> distance_m;

        double effective_rho_t() const { return rho_t ? *rho_t : params.rho_t(); }

        // Throws infeasible_qos when the QoS objective has r_th <= 0.
        selection_objective make_objective() const;
        // Throws config_error when the resulting config is invalid.
        simulation_config make_simulation(bool with_sweep) const;
    };

    // Parses the flat `key = value` format: one setting per line, `#` starts
    // a comment, blank lines ignored, lists comma-separated. Throws
    // config_error naming the offending line.
    std::vector<setting> parse_config_text(std::string_view text);

    // Throws config_error for unknown keys or invalid values.
    void apply_setting(options &opts, std::string_view key, std::string_view value);

    // Settings echoed into report headers, in fixed order. Each line is
    // valid config-file syntax.
    std::vector<setting> effective_settings(const options &opts);

    // Decimal with 17 significant digits.
    std::string format_double(double v);
    std::string pair_id(const user_pair &p); // "m-n"

    void write_simulation_report(std::ostream &os, std::string_view command, const options &opts, const simulation_result &result);
    void write_sweep_report(std::ostream &os, const options &opts, sweep_param param, const std::vector<sweep_point> &points);
    void write_ranking(std::ostream &os, std::string_view command, const options &opts, const std::vector<pair_metrics> &ranked);

    // Entry point. args[0] is the program name.
    int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);
}

#endif
