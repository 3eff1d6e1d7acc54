/*
* Copyright (C) 2026 coopsim developers
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*     http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/
#ifndef COOPSIM_RNG_HPP
#define COOPSIM_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <utility>
#include <vector>

namespace coopsim {

/// splitmix64 finalizer; bijective on 64-bit words.
inline std::uint64_t mix64(std::uint64_t z)
{
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Seed for one replication of a sweep cell: chained mix64 over
/// (master seed, alpha index, beta index, replication index). The additive
/// constants keep the three indices in distinct input planes so that
/// permuting them cannot produce the same chain.
inline std::uint64_t derive_run_seed(std::uint64_t master_seed, std::uint64_t alpha_index,
                                     std::uint64_t beta_index, std::uint64_t replication)
{
    std::uint64_t h = mix64(master_seed);
    h = mix64(h ^ (alpha_index + 0x517cc1b727220a95ULL));
    h = mix64(h ^ (beta_index + 0x2545f4914f6cdd1dULL));
    h = mix64(h ^ (replication + 0x9e3779b97f4a7c15ULL));
    return h;
}

/// Seeded random source owned by exactly one simulation run.
///
/// The engine is std::mt19937_64 (its output sequence is pinned by the
/// standard), but every variate transform lives here: the std:: distribution
/// adaptors are implementation-defined, and run reports must be reproducible
/// bit-for-bit from the seed alone.
class RandomSource
{
public:
    explicit RandomSource(std::uint64_t seed)
        : engine_(seed)
    {
    }

    /// Uniform double in [0, 1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// True with probability p (p <= 0 never, p >= 1 always). One draw.
    bool bernoulli(double p) { return uniform01() < p; }

    /// Uniform integer in [0, bound); bound >= 1. Rejection keeps it unbiased.
    std::uint64_t below(std::uint64_t bound)
    {
        const std::uint64_t threshold = (0 - bound) % bound;
        std::uint64_t r = engine_();
        while (r < threshold) {
            r = engine_();
        }
        return r % bound;
    }

    /// Normal variate via Box-Muller; consumes exactly two uniforms.
    double normal(double mean, double stddev)
    {
        const double u1 = 1.0 - uniform01(); // (0, 1], keeps log finite
        const double u2 = uniform01();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        return mean + stddev * radius * std::cos(2.0 * std::numbers::pi * u2);
    }

    /// Fisher-Yates shuffle; n - 1 index draws.
    template <typename T>
    void shuffle(std::vector<T>& values)
    {
        for (std::size_t i = values.size(); i > 1; --i) {
            std::swap(values[i - 1], values[below(i)]);
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace coopsim

#endif // COOPSIM_RNG_HPP
