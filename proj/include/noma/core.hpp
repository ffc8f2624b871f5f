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


#ifndef NOMA_CORE_HPP
#define NOMA_CORE_HPP

// Two-user downlink NOMA with an untrusted weak user. Within a pair (m, n)
// user m is the strong user (gain_m > gain_n). The strong user decodes and
// cancels x_n before decoding x_m; the weak user decodes x_n and may then
// try to decode x_m. All rates are in bits/s/Hz.
//
// Every quantity depends on the channel and power budget only through the
// gain-SNR products gain * rho_t.

namespace noma
{
    // Power-allocation coefficients with alpha_m + alpha_n = 1. The closed
    // interval [0, 1] is admitted: the secrecy-only objective uses
    // alpha_m = 1 and the weak-rate objective alpha_m = 0.
    class power_split
    {
    public:
        // Throws domain_error unless 0 <= alpha_m <= 1.
        static power_split from_strong(double alpha_m);

        static power_split all_strong() noexcept { return power_split(1.0); }
        static power_split all_weak() noexcept { return power_split(0.0); }

        double alpha_m() const noexcept { return alpha_m_; }
        double alpha_n() const noexcept { return 1.0 - alpha_m_; }

        friend bool operator==(const power_split &, const power_split &) = default;

    private:
        explicit power_split(double alpha_m) noexcept : alpha_m_(alpha_m) {}

        double alpha_m_;
    };

    // Linear SINRs Gamma_ab: signal of user a as decoded at user b.
    struct pair_sinr
    {
        double gamma_mm; // strong user, own signal after SIC
        double gamma_mn; // strong user's signal at the weak user (eavesdropping link)
        double gamma_nn; // weak user, own signal
        double gamma_nm; // weak user's signal at the strong user
    };

    // Minimum rate guaranteed to the weak user.
    class qos_target
    {
    public:
        // Throws domain_error unless r_th is positive and finite.
        explicit qos_target(double r_th);

        double r_th() const noexcept { return r_th_; }
        double pi() const noexcept { return pi_; } // 2^r_th

    private:
        double r_th_;
        double pi_;
    };

    // Throws ordering_error unless gain_m > gain_n, domain_error on
    // non-positive inputs.
    pair_sinr sinr(double gain_m, double gain_n, power_split split, double rho_t);

    // log2(1 + sinr). Throws domain_error for negative or NaN input.
    double rate_from_sinr(double sinr);

    // R_mm - R_mn, the strong user's secrecy rate against the weak user.
    // Non-negative; zero only at alpha_m = 0.
    double secrecy_rate_strong(double gain_m, double gain_n, power_split split, double rho_t);

    // R_nn - R_nm, the weak user's secrecy rate against the strong user.
    // Never positive for a correctly ordered pair.
    double secrecy_rate_weak(double gain_m, double gain_n, power_split split, double rho_t);

    // R_nn = log2(1 + Gamma_nn). Gamma_nn does not involve the strong
    // user's gain; the four-argument form also checks the pair ordering.
    double weak_user_rate(double gain_m, double gain_n, power_split split, double rho_t);
    double weak_user_rate(double gain_n, power_split split, double rho_t);

    // True iff user a can hold a positive secrecy rate against user b.
    bool positive_secrecy_feasible(double gain_a, double gain_b);

    // Exclusive supremum log2(1 + gain_n * rho_t) of QoS targets for which
    // the optimal split is strictly inside (0, 1).
    double rth_upper_bound(double gain_n, double rho_t);

    // Secrecy-maximizing split under R_nn >= r_th:
    //   alpha_m* = (gain_n rho_t - Pi + 1) / (Pi gain_n rho_t),  Pi = 2^r_th.
    // The QoS constraint is active at the optimum. Throws infeasible_qos
    // outside 0 < r_th < rth_upper_bound(gain_n, rho_t).
    power_split optimal_alpha(double gain_n, double rho_t, const qos_target &target);

    // d(secrecy_rate_strong)/d(alpha_m)
    //   = (gain_m - gain_n) rho_t / (ln2 (1 + alpha_m gain_m rho_t)(1 + alpha_m gain_n rho_t)).
    // Accepts gain_m == gain_n (returns 0); throws ordering_error when gain_m < gain_n.
    double secrecy_rate_derivative(double gain_m, double gain_n, power_split split, double rho_t);

    // d(R_nn)/d(alpha_m) = -gain_n rho_t / (ln2 (1 + alpha_m gain_n rho_t)). Always negative.
    double weak_rate_derivative(double gain_n, power_split split, double rho_t);

    // d(Gamma_nn)/d(alpha_m) = -gain_n (gain_n rho_t + 1) rho_t / (alpha_m gain_n rho_t + 1)^2.
    // Related to weak_rate_derivative by the chain rule factor 1 / (ln2 (1 + Gamma_nn)).
    double weak_sinr_derivative(double gain_n, power_split split, double rho_t);
}

#endif
