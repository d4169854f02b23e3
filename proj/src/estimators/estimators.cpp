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

#include "qgp/estimators/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qgp/errors.hpp"
#include "qgp/parallel.hpp"
#include "qgp/statistics.hpp"
#include "qgp/text.hpp"

namespace qgp::estimators {

namespace {

constexpr double kRotationSafety = 0.999;
constexpr double kRatioSlack = 1e-12;

void require_samples(std::uint64_t samples, const char *what) {
    if (samples < 2) {
        throw ConfigError(std::string(what) + " needs at least 2 samples");
    }
}

struct LogdetPartial {
    RunningStats stats;
    std::uint64_t clamps = 0;
};

struct DatafitPartial {
    std::uint64_t successes = 0;
    std::uint64_t trials = 0;
    std::uint64_t clamps = 0;
};

} // namespace

RotationConstant choose_rotation_constant(const qsim::PhaseEstimationConfig &cfg,
                                          double noise_variance) {
    cfg.validate();
    if (!(noise_variance > 0.0) || !std::isfinite(noise_variance)) {
        throw ConfigError("noise variance must be positive");
    }
    RotationConstant c;
    c.noise_variance = noise_variance;
    c.evolution_time = cfg.evolution_time;
    c.spectral_bound = cfg.spectral_bound;
    c.value = std::min(std::sqrt(noise_variance),
                       kRotationSafety * std::sqrt(std::numbers::pi / cfg.evolution_time));
    return c;
}

RotationConstant explicit_rotation_constant(double value) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw ConfigError("rotation constant must be positive");
    }
    RotationConstant c;
    c.value = value;
    c.user_supplied = true;
    return c;
}

double sample_random_eigenvalue(const numerics::SpectralDecomposition &sd,
                                const qsim::PhaseEstimationConfig &cfg, Rng &rng) {
    for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
        const auto index = static_cast<Eigen::Index>(rng.index(sd.size()));
        const std::size_t bin = qsim::sample_pe_outcome(sd.eigenvalues(index), cfg, rng);
        if (const auto value = qsim::decode_eigenvalue(bin, cfg)) {
            return *value;
        }
    }
    throw NumericError("zero-bin readout persisted through every resample");
}

EstimateReport estimate_logdet(const EigenvalueSampler &sampler, std::uint64_t samples,
                               std::uint64_t seed, const EstimatorOptions &options) {
    require_samples(samples, "log-determinant estimate");
    const auto total = reduce_trials<LogdetPartial>(
        samples, options.threads,
        [&](std::uint64_t begin, std::uint64_t end) {
            LogdetPartial p;
            for (std::uint64_t s = begin; s < end; ++s) {
                Rng rng = Rng::for_trial(seed, streams::kLogdet, s);
                p.stats.add(std::log(sampler.sample_uniform(rng, p.clamps)));
            }
            return p;
        },
        [](const LogdetPartial &a, const LogdetPartial &b) {
            return LogdetPartial{RunningStats::merge(a.stats, b.stats), a.clamps + b.clamps};
        });

    const double n = static_cast<double>(sampler.size());
    EstimateReport r;
    r.mean = n * total.stats.mean;
    r.standard_error = n * total.stats.standard_error();
    r.sample_count = samples;
    r.seed = seed;
    r.clamp_count = total.clamps;
    return r;
}

EstimateReport estimate_logdet(const numerics::SpectralDecomposition &sd,
                               const qsim::PhaseEstimationConfig &cfg, std::uint64_t samples,
                               std::uint64_t seed, const EstimatorOptions &options) {
    return estimate_logdet(EigenvalueSampler(sd, cfg), samples, seed, options);
}

std::vector<double> preparation_cdf(const numerics::ProjectedVector &py) {
    std::vector<double> cdf(static_cast<std::size_t>(py.coefficients.size()));
    double acc = 0.0;
    for (std::size_t i = 0; i < cdf.size(); ++i) {
        const double g = py.coefficients(static_cast<Eigen::Index>(i));
        acc += g * g;
        cdf[i] = acc;
    }
    if (cdf.empty() || !(acc > 0.0)) {
        throw DataError("data-fit estimate needs a nonzero observation vector");
    }
    return cdf;
}

bool qlsa_datafit_trial(const EigenvalueSampler &sampler, const std::vector<double> &cdf,
                        const RotationConstant &c, Rng &rng, std::uint64_t &clamps) {
    const double lambda_hat = sampler.sample_weighted(cdf, rng, clamps);
    const double ratio = c.squared() / lambda_hat;
    if (ratio > 1.0 + kRatioSlack) {
        throw DomainError("rotation amplitude exceeds one: C^2 / lambda_hat = " +
                          format_real(ratio));
    }
    return rng.uniform() < ratio;
}

bool qlsa_datafit_trial(const numerics::SpectralDecomposition &sd,
                        const numerics::ProjectedVector &py,
                        const qsim::PhaseEstimationConfig &cfg, const RotationConstant &c,
                        Rng &rng) {
    const EigenvalueSampler sampler(sd, cfg);
    std::uint64_t clamps = 0;
    return qlsa_datafit_trial(sampler, preparation_cdf(py), c, rng, clamps);
}

EstimateReport estimate_datafit(const EigenvalueSampler &sampler,
                                const numerics::ProjectedVector &py, const RotationConstant &c,
                                std::uint64_t samples, std::uint64_t seed,
                                const EstimatorOptions &options) {
    require_samples(samples, "data-fit estimate");
    if (static_cast<std::size_t>(py.coefficients.size()) != sampler.size()) {
        throw DimensionError("projected vector does not match the decomposition");
    }
    const auto cdf = preparation_cdf(py);
    const auto total = reduce_trials<DatafitPartial>(
        samples, options.threads,
        [&](std::uint64_t begin, std::uint64_t end) {
            DatafitPartial p;
            for (std::uint64_t s = begin; s < end; ++s) {
                Rng rng = Rng::for_trial(seed, streams::kDatafit, s);
                p.successes += qlsa_datafit_trial(sampler, cdf, c, rng, p.clamps) ? 1 : 0;
                ++p.trials;
            }
            return p;
        },
        [](const DatafitPartial &a, const DatafitPartial &b) {
            return DatafitPartial{a.successes + b.successes, a.trials + b.trials,
                                  a.clamps + b.clamps};
        });

    const double scale = py.norm * py.norm / c.squared();
    const double s = static_cast<double>(samples);
    const double p = static_cast<double>(total.successes) / s;
    EstimateReport r;
    r.mean = scale * p;
    r.standard_error = scale * std::sqrt(p * (1.0 - p) / s);
    r.sample_count = samples;
    r.seed = seed;
    r.clamp_count = total.clamps;
    r.reject_count = samples - total.successes;
    return r;
}

EstimateReport estimate_datafit(const numerics::SpectralDecomposition &sd,
                                const numerics::ProjectedVector &py,
                                const qsim::PhaseEstimationConfig &cfg, const RotationConstant &c,
                                std::uint64_t samples, std::uint64_t seed,
                                const EstimatorOptions &options) {
    return estimate_datafit(EigenvalueSampler(sd, cfg), py, c, samples, seed, options);
}

EstimateReport combine_lml(const EstimateReport &logdet, const EstimateReport &datafit,
                           std::size_t n, std::uint64_t seed) {
    EstimateReport r;
    r.mean = -0.5 * logdet.mean - 0.5 * datafit.mean -
             0.5 * static_cast<double>(n) * std::log(2.0 * std::numbers::pi);
    r.standard_error = 0.5 * std::hypot(logdet.standard_error, datafit.standard_error);
    r.sample_count = logdet.sample_count + datafit.sample_count;
    r.seed = seed;
    r.clamp_count = logdet.clamp_count + datafit.clamp_count;
    r.reject_count = datafit.reject_count;
    return r;
}

EstimateReport estimate_lml(const EigenvalueSampler &sampler,
                            const numerics::ProjectedVector &py, const RotationConstant &c,
                            std::uint64_t samples_det, std::uint64_t samples_fit,
                            std::uint64_t seed, const EstimatorOptions &options) {
    require_samples(samples_fit, "data-fit estimate");
    const auto logdet = estimate_logdet(sampler, samples_det, seed, options);
    EstimateReport datafit;
    if (py.norm > 0.0) {
        datafit = estimate_datafit(sampler, py, c, samples_fit, seed, options);
    }
    return combine_lml(logdet, datafit, sampler.size(), seed);
}

EstimateReport estimate_lml(const numerics::SpectralDecomposition &sd,
                            const numerics::ProjectedVector &py,
                            const qsim::PhaseEstimationConfig &cfg, const RotationConstant &c,
                            std::uint64_t samples_det, std::uint64_t samples_fit,
                            std::uint64_t seed, const EstimatorOptions &options) {
    return estimate_lml(EigenvalueSampler(sd, cfg), py, c, samples_det, samples_fit, seed,
                        options);
}

namespace {

qsim::PhaseEstimationConfig make_config(const numerics::SymmetricMatrix &a,
                                        const QuantumSettings &settings) {
    const double bound = settings.spectral_bound ? *settings.spectral_bound
                                                 : numerics::spectral_upper_bound(a);
    if (!settings.evolution_time) {
        return qsim::PhaseEstimationConfig::max_resolution(settings.register_size, bound,
                                                           settings.clamp_policy);
    }
    qsim::PhaseEstimationConfig cfg;
    cfg.register_size = settings.register_size;
    cfg.evolution_time = *settings.evolution_time;
    cfg.spectral_bound = bound;
    cfg.clamp_policy = settings.clamp_policy;
    cfg.validate();
    return cfg;
}

numerics::SpectralDecomposition positive_spectrum(const numerics::SymmetricMatrix &a) {
    auto sd = numerics::eigendecompose(a);
    if (sd.min_eigenvalue() <= 0.0) {
        throw DefinitenessError("matrix has a non-positive eigenvalue");
    }
    return sd;
}

} // namespace

QuantumInstance::QuantumInstance(const numerics::SymmetricMatrix &a, const numerics::Vector &y,
                                 double noise_variance, const QuantumSettings &settings)
    : settings_(settings), sd_(positive_spectrum(a)), py_(numerics::project(sd_, y)),
      sampler_(sd_, make_config(a, settings)) {
    c_ = settings.rotation_constant ? explicit_rotation_constant(*settings.rotation_constant)
                                    : choose_rotation_constant(sampler_.config(), noise_variance);
}

EstimateReport QuantumInstance::logdet(std::uint64_t seed) const {
    return estimate_logdet(sampler_, settings_.samples_det, seed, settings_.options);
}

EstimateReport QuantumInstance::datafit(std::uint64_t seed) const {
    return estimate_datafit(sampler_, py_, c_, settings_.samples_fit, seed, settings_.options);
}

EstimateReport QuantumInstance::lml(std::uint64_t seed) const {
    return estimate_lml(sampler_, py_, c_, settings_.samples_det, settings_.samples_fit, seed,
                        settings_.options);
}

} // namespace qgp::estimators
