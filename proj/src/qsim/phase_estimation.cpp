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

#include "qgp/qsim/phase_estimation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <ostream>
#include <string>

#include "qgp/errors.hpp"
#include "qgp/text.hpp"

namespace qgp::qsim {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Relative slack for comparisons against the spectral bound; t0 is derived
// from the bound by a division, so the top eigenvalue can land a few ulps
// above bin T - 1.
constexpr double kBoundSlack = 1e-12;

bool is_power_of_two(std::size_t x) { return x != 0 && (x & (x - 1)) == 0; }

} // namespace

std::string_view clamp_policy_name(ClampPolicy policy) {
    return policy == ClampPolicy::HalfBinClamp ? "half-bin" : "resample";
}

ClampPolicy parse_clamp_policy(std::string_view name) {
    if (name == "half-bin" || name == "halfbin") {
        return ClampPolicy::HalfBinClamp;
    }
    if (name == "resample") {
        return ClampPolicy::Resample;
    }
    throw ConfigError("unknown clamp policy '" + std::string(name) +
                      "' (expected half-bin or resample)");
}

PhaseEstimationConfig PhaseEstimationConfig::max_resolution(std::size_t register_size,
                                                            double spectral_bound,
                                                            ClampPolicy policy) {
    PhaseEstimationConfig cfg;
    cfg.register_size = register_size;
    cfg.spectral_bound = spectral_bound;
    cfg.evolution_time = kTwoPi * static_cast<double>(register_size - 1) / spectral_bound;
    cfg.clamp_policy = policy;
    cfg.validate();
    return cfg;
}

void PhaseEstimationConfig::validate() const {
    if (register_size < 2 || !is_power_of_two(register_size)) {
        throw ConfigError("register size T must be a power of two >= 2, got " +
                          std::to_string(register_size));
    }
    if (!(evolution_time > 0.0) || !std::isfinite(evolution_time)) {
        throw ConfigError("evolution time t0 must be finite and > 0");
    }
    if (!(spectral_bound > 0.0) || !std::isfinite(spectral_bound)) {
        throw ConfigError("spectral bound must be finite and > 0");
    }
    const double top = static_cast<double>(register_size - 1);
    if (center_bin(spectral_bound) > top * (1.0 + kBoundSlack)) {
        throw ConfigError("aliasing: t0 * lambda_upper / (2 pi) = " +
                          std::to_string(center_bin(spectral_bound)) + " exceeds T - 1 = " +
                          std::to_string(register_size - 1));
    }
}

double PhaseEstimationConfig::bins_per_unit() const { return evolution_time / kTwoPi; }

double OutcomeDistribution::total() const {
    return std::accumulate(probabilities.begin(), probabilities.end(), 0.0);
}

OutcomeDistribution pe_outcome_distribution(double eigenvalue, const PhaseEstimationConfig &cfg) {
    cfg.validate();
    if (!(eigenvalue > 0.0) || eigenvalue > cfg.spectral_bound * (1.0 + kBoundSlack)) {
        throw DomainError("eigenvalue " + format_real(eigenvalue) + " outside (0, " +
                          format_real(cfg.spectral_bound) + "]");
    }
    const std::size_t t = cfg.register_size;
    const double tt = static_cast<double>(t);
    const double center = cfg.center_bin(eigenvalue);

    OutcomeDistribution dist;
    dist.probabilities.resize(t);
    for (std::size_t k = 0; k < t; ++k) {
        // d = c - k lies in (-T, T), so the denominator vanishes only at d = 0.
        // The numerator uses the fractional part of d so that bins an exact
        // integer away from the centre get probability exactly zero.
        const double d = center - static_cast<double>(k);
        const double frac = d - std::round(d);
        const double den = std::sin(std::numbers::pi * d / tt);
        if (den == 0.0) {
            dist.probabilities[k] = 1.0;
            continue;
        }
        const double num = std::sin(std::numbers::pi * frac);
        dist.probabilities[k] = (num * num) / (tt * tt * den * den);
    }
    return dist;
}

OutcomeSampler::OutcomeSampler(const OutcomeDistribution &dist) : cdf_(dist.size()) {
    if (dist.size() == 0) {
        throw ConfigError("empty outcome distribution");
    }
    std::partial_sum(dist.probabilities.begin(), dist.probabilities.end(), cdf_.begin());
    if (!(cdf_.back() > 0.0)) {
        throw NumericError("outcome distribution has no mass");
    }
}

std::size_t OutcomeSampler::operator()(Rng &rng) const {
    const double u = rng.uniform() * cdf_.back();
    const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    return std::min(static_cast<std::size_t>(it - cdf_.begin()), cdf_.size() - 1);
}

std::size_t sample_pe_outcome(double eigenvalue, const PhaseEstimationConfig &cfg, Rng &rng) {
    return OutcomeSampler(pe_outcome_distribution(eigenvalue, cfg))(rng);
}

std::optional<double> decode_eigenvalue(std::size_t bin, const PhaseEstimationConfig &cfg) {
    if (bin >= cfg.register_size) {
        throw DomainError("bin " + std::to_string(bin) + " outside register of size " +
                          std::to_string(cfg.register_size));
    }
    if (bin == 0) {
        if (cfg.clamp_policy == ClampPolicy::Resample) {
            return std::nullopt;
        }
        return 0.5 / cfg.bins_per_unit();
    }
    return static_cast<double>(bin) / cfg.bins_per_unit();
}

double total_variation(const OutcomeDistribution &p, const OutcomeDistribution &q) {
    if (p.size() != q.size()) {
        throw DimensionError("distributions over different numbers of bins");
    }
    double sum = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        sum += std::abs(p[k] - q[k]);
    }
    return 0.5 * sum;
}

void write_distribution_csv(std::ostream &out, const OutcomeDistribution &dist) {
    out << "bin,probability\n";
    for (std::size_t k = 0; k < dist.size(); ++k) {
        out << k << ',' << format_real(dist[k]) << '\n';
    }
}

} // namespace qgp::qsim
