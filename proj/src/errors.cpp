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


#include "noma/errors.hpp"

#include <sstream>
#include <utility>

namespace noma
{
    namespace
    {
        std::string qos_message(double r_th, double upper)
        {
            std::ostringstream os;
            os.precision(17);
            os << "QoS target R_th = " << r_th << " is infeasible; valid range is (0, " << upper << ")";
            return os.str();
        }

        std::string pair_message(double r_th, const std::vector<pair_bound> &bounds)
        {
            std::ostringstream os;
            os.precision(17);
            os << "no pair can guarantee R_th = " << r_th << ";";
            for (const auto &b : bounds)
                os << " (" << b.m << "," << b.n << ") requires R_th < " << b.rth_upper << ";";
            return os.str();
        }
    }

    infeasible_qos::infeasible_qos(double r_th, double upper)
        : std::domain_error(qos_message(r_th, upper)), r_th_(r_th), upper_(upper)
    {
    }

    no_feasible_pair::no_feasible_pair(double r_th, std::vector<pair_bound> bounds)
        : std::runtime_error(pair_message(r_th, bounds)), r_th_(r_th), bounds_(std::move(bounds))
    {
    }
}
