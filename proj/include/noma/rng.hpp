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


#ifndef NOMA_RNG_HPP
#define NOMA_RNG_HPP

#include <cmath>
#include <cstdint>
#include <limits>

namespace noma
{
    // SplitMix64 (Steele, Lea, Flood 2014). Output is fully determined by the
    // 64-bit state, independent of compiler and standard library, so seeded
    // runs are bit-reproducible across platforms.
    class splitmix64
    {
    public:
        using result_type = std::uint64_t;

        explicit constexpr splitmix64(std::uint64_t seed) noexcept : state_(seed) {}

        static constexpr result_type min() noexcept { return 0; }
        static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

        constexpr result_type operator()() noexcept
        {
            state_ += 0x9e3779b97f4a7c15ULL;
            return finalize(state_);
        }

        static constexpr std::uint64_t finalize(std::uint64_t z) noexcept
        {
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            return z ^ (z >> 31);
        }

    private:
        std::uint64_t state_;
    };

    // Named substreams of a master seed.
    enum class stream : std::uint64_t
    {
        channel = 1,
        pair_choice = 2,
    };

    // Seed of substream (master, stream, index). Distinct (stream, index)
    // tuples give statistically independent SplitMix64 sequences.
    constexpr std::uint64_t derive_seed(std::uint64_t master, stream s, std::uint64_t index) noexcept
    {
        std::uint64_t x = splitmix64::finalize(master + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(s) + 1));
        x = splitmix64::finalize(x ^ (index + 0xd1b54a32d192ed03ULL));
        return x;
    }

    // Uniform double on the open interval (0, 1): 53 random mantissa bits
    // shifted by half an ulp so neither endpoint is produced.
    template <class Gen>
    double uniform_open01(Gen &gen)
    {
        return (static_cast<double>(gen() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Exponential variate with the given mean by inverse-CDF transform,
    // x = -mean * ln(u). Strictly positive since u < 1.
    template <class Gen>
    double exponential(Gen &gen, double mean)
    {
        return -mean * std::log(uniform_open01(gen));
    }

    // Unbiased integer in [0, n) by rejection.
    template <class Gen>
    std::uint64_t uniform_index(Gen &gen, std::uint64_t n)
    {
        const std::uint64_t threshold = (0 - n) % n;
        for (;;)
        {
            const std::uint64_t x = gen();
            if (x >= threshold)
                return x % n;
        }
    }
}

#endif
