// Copyright 2026 The qgp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>

namespace qgp {

/// One step of the SplitMix64 sequence; also used as a 64-bit mixer.
std::uint64_t splitmix64(std::uint64_t &state);

/// Order-sensitive combination of two 64-bit keys into a new seed.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

/// xoshiro256** generator.
///
/// Satisfies UniformRandomBitGenerator so it plugs into <random>
/// distributions, and adds the two draws the simulators need on hot paths
/// with a fixed, platform-independent definition: `uniform()` on [0, 1) with
/// 53 bits and an unbiased `index(n)`.
///
/// Monte Carlo loops never share one generator across trials. Each trial
/// derives its own generator from (seed, stream, trial index) through
/// `for_trial`, which makes results independent of how trials are scheduled
/// over threads.
class Rng {
  public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed);

    static Rng for_trial(std::uint64_t seed, std::uint64_t stream,
                         std::uint64_t index);

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() {
        return std::numeric_limits<result_type>::max();
    }

    result_type operator()();

    double uniform();

    /// Uniform integer in [0, n). n must be positive.
    std::size_t index(std::size_t n);

  private:
    std::array<std::uint64_t, 4> state_;
};

/// Well-known stream tags for the independent random streams of the
/// estimators. Keeping them in one place avoids accidental stream reuse.
namespace streams {
inline constexpr std::uint64_t kLogdet = 0x6c6f6764657431ULL;
inline constexpr std::uint64_t kDatafit = 0x64617461666974ULL;
inline constexpr std::uint64_t kProbes = 0x70726f626573ULL;
inline constexpr std::uint64_t kPhaseEstimation = 0x7065ULL;
} // namespace streams

} // namespace qgp
