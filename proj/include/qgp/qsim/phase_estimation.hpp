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

/**
 * @file
 * Analytic phase-estimation backend.
 *
 * A time register of T = 2^m states in uniform superposition controls the
 * evolution exp(+i A t0 tau / T), tau = 0..T-1. For an eigenvector of A with
 * eigenvalue lambda the register then holds (1/sqrt(T)) sum_tau
 * exp(i lambda t0 tau / T)|tau>; the register transform with kernel
 * exp(-2 pi i k tau / T) followed by a computational-basis readout yields
 * bin k with the Fejer probability
 *
 *     P(k) = sin^2(T d / 2) / (T^2 sin^2(d / 2)),  d = lambda t0 / T - 2 pi k / T,
 *
 * centred at bin c = lambda t0 / (2 pi). Bin k decodes to lambda_hat =
 * 2 pi k / t0, so the bin width in eigenvalue units is 2 pi / t0.
 */

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "qgp/random.hpp"

namespace qgp::qsim {

/// What to do with the zero bin, which would decode to lambda_hat = 0.
enum class ClampPolicy {
    HalfBinClamp, ///< decode k = 0 as half a bin, pi / t0
    Resample,     ///< report no value; the caller redraws
};

std::string_view clamp_policy_name(ClampPolicy policy);
ClampPolicy parse_clamp_policy(std::string_view name);

struct PhaseEstimationConfig {
    std::size_t register_size = 1024; ///< T, a power of two >= 2
    double evolution_time = 0.0;      ///< t0 > 0
    double spectral_bound = 0.0;      ///< lambda_upper > 0, no eigenvalue above it
    ClampPolicy clamp_policy = ClampPolicy::HalfBinClamp;

    /// t0 = 2 pi (T - 1) / lambda_upper: the bound lands on the top bin, the
    /// finest resolution without aliasing.
    static PhaseEstimationConfig max_resolution(std::size_t register_size,
                                                double spectral_bound,
                                                ClampPolicy policy = ClampPolicy::HalfBinClamp);

    /// Throws ConfigError for a non power-of-two register or non-positive
    /// times, and when t0 lambda_upper / (2 pi) exceeds T - 1.
    void validate() const;

    /// t0 / (2 pi): the (fractional) bin an eigenvalue of 1 lands in.
    double bins_per_unit() const;
    double bin_width() const { return 1.0 / bins_per_unit(); }
    double center_bin(double eigenvalue) const { return eigenvalue * bins_per_unit(); }
};

struct OutcomeDistribution {
    std::vector<double> probabilities;

    std::size_t size() const { return probabilities.size(); }
    double operator[](std::size_t k) const { return probabilities[k]; }
    double total() const;
};

/// Exact readout law of the time register for one eigenvalue.
OutcomeDistribution pe_outcome_distribution(double eigenvalue,
                                            const PhaseEstimationConfig &cfg);

/// Inverse-CDF sampler over a fixed distribution; one uniform per draw.
class OutcomeSampler {
  public:
    explicit OutcomeSampler(const OutcomeDistribution &dist);

    std::size_t operator()(Rng &rng) const;

  private:
    std::vector<double> cdf_;
};

std::size_t sample_pe_outcome(double eigenvalue, const PhaseEstimationConfig &cfg, Rng &rng);

/// lambda_hat = 2 pi k / t0 for k >= 1. For k = 0, pi / t0 under
/// HalfBinClamp and std::nullopt under Resample.
std::optional<double> decode_eigenvalue(std::size_t bin, const PhaseEstimationConfig &cfg);

/// Total-variation distance, 0.5 * sum |p - q|.
double total_variation(const OutcomeDistribution &p, const OutcomeDistribution &q);

/// "bin,probability" CSV for plotting.
void write_distribution_csv(std::ostream &out, const OutcomeDistribution &dist);

} // namespace qgp::qsim
