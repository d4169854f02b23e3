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
 * Monte Carlo estimators built on simulated phase estimation.
 *
 * Log-determinant: an eigen-index drawn uniformly at random is read out
 * through phase estimation, so log det A = n E[log lambda_hat] up to bin
 * quantization. Data fit: the index is drawn with probability
 * gamma_i^2 / |y|^2 and a post-selection succeeds with probability
 * C^2 / lambda_hat, so |y|^2 / C^2 times the success rate estimates
 * y^T A^{-1} y.
 *
 * Every trial s draws from Rng::for_trial(seed, stream, s) and partial sums
 * are merged in chunk order, so reports are bit-identical for any thread
 * count.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qgp/estimators/eigenvalue_sampler.hpp"
#include "qgp/estimators/report.hpp"
#include "qgp/numerics/decomposition.hpp"
#include "qgp/qsim/phase_estimation.hpp"
#include "qgp/random.hpp"

namespace qgp::estimators {

/// Ancilla rotation scale. `value` is C; the remaining fields record what
/// it was derived from (zero when C was given explicitly).
struct RotationConstant {
    double value = 0.0;
    double noise_variance = 0.0;
    double evolution_time = 0.0;
    double spectral_bound = 0.0;
    bool user_supplied = false;

    double squared() const { return value * value; }
};

/// C = min(sqrt(noise_variance), 0.999 sqrt(pi / t0)). The second term keeps
/// C^2 / lambda_hat below one even for the half-bin decode pi / t0.
RotationConstant choose_rotation_constant(const qsim::PhaseEstimationConfig &cfg,
                                          double noise_variance);

/// An explicit C. Only checked trial by trial: a readout with
/// C^2 / lambda_hat > 1 raises DomainError.
RotationConstant explicit_rotation_constant(double value);

struct EstimatorOptions {
    unsigned threads = 0; ///< 0 = hardware concurrency
};

/// One draw from the uniform mixture over eigenvalues.
double sample_random_eigenvalue(const numerics::SpectralDecomposition &sd,
                                const qsim::PhaseEstimationConfig &cfg, Rng &rng);

EstimateReport estimate_logdet(const EigenvalueSampler &sampler, std::uint64_t samples,
                               std::uint64_t seed, const EstimatorOptions &options = {});

EstimateReport estimate_logdet(const numerics::SpectralDecomposition &sd,
                               const qsim::PhaseEstimationConfig &cfg, std::uint64_t samples,
                               std::uint64_t seed, const EstimatorOptions &options = {});

/// Cumulative gamma_i^2 weights for the state-preparation draw.
std::vector<double> preparation_cdf(const numerics::ProjectedVector &py);

/// One post-selection trial on a prepared sampler.
bool qlsa_datafit_trial(const EigenvalueSampler &sampler, const std::vector<double> &cdf,
                        const RotationConstant &c, Rng &rng, std::uint64_t &clamps);

bool qlsa_datafit_trial(const numerics::SpectralDecomposition &sd,
                        const numerics::ProjectedVector &py,
                        const qsim::PhaseEstimationConfig &cfg, const RotationConstant &c,
                        Rng &rng);

EstimateReport estimate_datafit(const EigenvalueSampler &sampler,
                                const numerics::ProjectedVector &py, const RotationConstant &c,
                                std::uint64_t samples, std::uint64_t seed,
                                const EstimatorOptions &options = {});

EstimateReport estimate_datafit(const numerics::SpectralDecomposition &sd,
                                const numerics::ProjectedVector &py,
                                const qsim::PhaseEstimationConfig &cfg, const RotationConstant &c,
                                std::uint64_t samples, std::uint64_t seed,
                                const EstimatorOptions &options = {});

/// Combines two independent reports into the log marginal likelihood
/// -logdet/2 - datafit/2 - (n/2) log(2 pi).
EstimateReport combine_lml(const EstimateReport &logdet, const EstimateReport &datafit,
                           std::size_t n, std::uint64_t seed);

/// A zero observation vector contributes an exactly zero data-fit term and
/// no data-fit trials are run.
EstimateReport estimate_lml(const EigenvalueSampler &sampler,
                            const numerics::ProjectedVector &py, const RotationConstant &c,
                            std::uint64_t samples_det, std::uint64_t samples_fit,
                            std::uint64_t seed, const EstimatorOptions &options = {});

EstimateReport estimate_lml(const numerics::SpectralDecomposition &sd,
                            const numerics::ProjectedVector &py,
                            const qsim::PhaseEstimationConfig &cfg, const RotationConstant &c,
                            std::uint64_t samples_det, std::uint64_t samples_fit,
                            std::uint64_t seed, const EstimatorOptions &options = {});

/// How an A, y pair is turned into a phase-estimation configuration.
struct QuantumSettings {
    std::size_t register_size = 1024;
    std::optional<double> evolution_time;   ///< default: maximum resolution
    std::optional<double> spectral_bound;   ///< default: spectral_upper_bound(A)
    std::optional<double> rotation_constant; ///< default: choose_rotation_constant
    qsim::ClampPolicy clamp_policy = qsim::ClampPolicy::HalfBinClamp;
    std::uint64_t samples_det = 10000;
    std::uint64_t samples_fit = 10000;
    EstimatorOptions options;
};

/// Decomposition, readout tables and rotation constant for one A, y pair,
/// built once and reused across estimator calls.
class QuantumInstance {
  public:
    QuantumInstance(const numerics::SymmetricMatrix &a, const numerics::Vector &y,
                    double noise_variance, const QuantumSettings &settings);

    const numerics::SpectralDecomposition &decomposition() const { return sd_; }
    const numerics::ProjectedVector &projection() const { return py_; }
    const qsim::PhaseEstimationConfig &config() const { return sampler_.config(); }
    const RotationConstant &rotation() const { return c_; }
    const EigenvalueSampler &sampler() const { return sampler_; }
    const QuantumSettings &settings() const { return settings_; }

    EstimateReport logdet(std::uint64_t seed) const;
    EstimateReport datafit(std::uint64_t seed) const;
    EstimateReport lml(std::uint64_t seed) const;

  private:
    QuantumSettings settings_;
    numerics::SpectralDecomposition sd_;
    numerics::ProjectedVector py_;
    EigenvalueSampler sampler_;
    RotationConstant c_;
};

} // namespace qgp::estimators
