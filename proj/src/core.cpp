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


#include "noma/core.hpp"
#include "noma/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace noma
{
    namespace
    {
        constexpr double ln2 = std::numbers::ln2;

        void require_positive(double v, const char *what)
        {
            if (!std::isfinite(v) || !(v > 0.0))
                throw domain_error(std::string(what) + " must be positive and finite");
        }

        void check_pair(double gain_m, double gain_n, double rho_t)
        {
            require_positive(gain_m, "gain_m");
            require_positive(gain_n, "gain_n");
            require_positive(rho_t, "rho_t");
            if (!(gain_m > gain_n))
                throw ordering_error("pair must be ordered (strong, weak) with gain_m > gain_n");
        }
    }

    power_split power_split::from_strong(double alpha_m)
    {
        if (!(alpha_m >= 0.0 && alpha_m <= 1.0))
            throw domain_error("alpha_m must lie in [0, 1]");
        return power_split(alpha_m);
    }

    qos_target::qos_target(double r_th) : r_th_(r_th), pi_(std::exp2(r_th))
    {
        require_positive(r_th, "R_th");
    }

    pair_sinr sinr(double gain_m, double gain_n, power_split split, double rho_t)
    {
        check_pair(gain_m, gain_n, rho_t);
        const double xm = gain_m * rho_t;
        const double xn = gain_n * rho_t;
        const double am = split.alpha_m();
        const double an = split.alpha_n();
        return {
            am * xm,
            am * xn,
            an * xn / (am * xn + 1.0),
            an * xm / (am * xm + 1.0),
        };
    }

    double rate_from_sinr(double s)
    {
        if (!(s >= 0.0))
            throw domain_error("SINR must be non-negative");
        return std::log2(1.0 + s);
    }

    // (1 + a xm) / (1 + a xn) = 1 + a (xm - xn) / (1 + a xn); log1p keeps the
    // result strictly positive for tiny gain differences.
    double secrecy_rate_strong(double gain_m, double gain_n, power_split split, double rho_t)
    {
        check_pair(gain_m, gain_n, rho_t);
        const double am = split.alpha_m();
        const double xn = gain_n * rho_t;
        const double dx = (gain_m - gain_n) * rho_t;
        return std::log1p(am * dx / (1.0 + am * xn)) / ln2;
    }

    // (1 + G_nn) / (1 + G_nm) - 1 = -alpha_n (xm - xn) / ((1 + a xn)(1 + xm)).
    double secrecy_rate_weak(double gain_m, double gain_n, power_split split, double rho_t)
    {
        check_pair(gain_m, gain_n, rho_t);
        const double am = split.alpha_m();
        const double an = split.alpha_n();
        const double xm = gain_m * rho_t;
        const double xn = gain_n * rho_t;
        const double dx = (gain_m - gain_n) * rho_t;
        return std::log1p(-an * dx / ((1.0 + am * xn) * (1.0 + xm))) / ln2;
    }

    double weak_user_rate(double gain_m, double gain_n, power_split split, double rho_t)
    {
        return rate_from_sinr(sinr(gain_m, gain_n, split, rho_t).gamma_nn);
    }

    double weak_user_rate(double gain_n, power_split split, double rho_t)
    {
        require_positive(gain_n, "gain_n");
        require_positive(rho_t, "rho_t");
        const double xn = gain_n * rho_t;
        return rate_from_sinr(split.alpha_n() * xn / (split.alpha_m() * xn + 1.0));
    }

    bool positive_secrecy_feasible(double gain_a, double gain_b)
    {
        require_positive(gain_a, "gain_a");
        require_positive(gain_b, "gain_b");
        return gain_a > gain_b;
    }

    double rth_upper_bound(double gain_n, double rho_t)
    {
        require_positive(gain_n, "gain_n");
        require_positive(rho_t, "rho_t");
        return std::log1p(gain_n * rho_t) / ln2;
    }

    power_split optimal_alpha(double gain_n, double rho_t, const qos_target &target)
    {
        const double upper = rth_upper_bound(gain_n, rho_t);
        const double r_th = target.r_th();
        if (!(r_th < upper))
            throw infeasible_qos(r_th, upper);

        const double x = gain_n * rho_t;
        const double pi_minus_1 = std::expm1(r_th * ln2);
        const double alpha = (x - pi_minus_1) / ((1.0 + pi_minus_1) * x);

        // Rounding can push alpha onto the boundary when r_th sits within a
        // few ulps of either end of the range.
        if (!(alpha > 0.0 && alpha < 1.0))
            throw infeasible_qos(r_th, upper);
        return power_split::from_strong(alpha);
    }

    double secrecy_rate_derivative(double gain_m, double gain_n, power_split split, double rho_t)
    {
        require_positive(gain_m, "gain_m");
        require_positive(gain_n, "gain_n");
        require_positive(rho_t, "rho_t");
        if (gain_m < gain_n)
            throw ordering_error("pair must be ordered (strong, weak) with gain_m >= gain_n");

        const double am = split.alpha_m();
        return (gain_m - gain_n) * rho_t / (ln2 * (1.0 + am * gain_m * rho_t) * (1.0 + am * gain_n * rho_t));
    }

    double weak_rate_derivative(double gain_n, power_split split, double rho_t)
    {
        require_positive(gain_n, "gain_n");
        require_positive(rho_t, "rho_t");
        const double x = gain_n * rho_t;
        return -x / (ln2 * (1.0 + split.alpha_m() * x));
    }

    double weak_sinr_derivative(double gain_n, power_split split, double rho_t)
    {
        require_positive(gain_n, "gain_n");
        require_positive(rho_t, "rho_t");
        const double x = gain_n * rho_t;
        const double d = split.alpha_m() * x + 1.0;
        return -gain_n * (x + 1.0) * rho_t / (d * d);
    }
}
