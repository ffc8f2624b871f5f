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

#ifndef NOMA_ERRORS_HPP
#define NOMA_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace noma
{
    // Argument outside the mathematical domain of an operation.
    class domain_error : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    // A pair was passed as (weak, strong) or with equal gains.
    class ordering_error : public domain_error
    {
    public:
        using domain_error::domain_error;
    };

    // QoS target outside the open interval (0, upper) for which the optimal
    // power split lies strictly inside (0, 1).
    class infeasible_qos : public std::domain_error
    {
    public:
        infeasible_qos(double r_th, double upper);

        double r_th() const noexcept { return r_th_; }
        double lower() const noexcept { return 0.0; }
        double upper() const noexcept { return upper_; }

    private:
        double r_th_;
        double upper_;
    };

    struct pair_bound
    {
        int m;
        int n;
        double rth_upper; // exclusive supremum of the feasible R_th for this pair
    };

    // Every pair violates its feasibility range for the requested QoS target.
    class no_feasible_pair : public std::runtime_error
    {
    public:
        no_feasible_pair(double r_th, std::vector<pair_bound> bounds);

        double r_th() const noexcept { return r_th_; }
        const std::vector<pair_bound> &bounds() const noexcept { return bounds_; }

    private:
        double r_th_;
        std::vector<pair_bound> bounds_;
    };

    // A simulation where no trial produced a feasible pair.
    class degenerate_result : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };
}

#endif
