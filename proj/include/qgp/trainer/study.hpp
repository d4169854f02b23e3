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
 * Empirical relative variance of a training-step LML difference versus n.
 *
 * For each n a GP dataset is drawn on a fixed-density 1-D grid, so the
 * covariance spectrum (and hence the phase-estimation setup) stays put
 * while n grows. The model is evaluated at a deliberately misspecified
 * lengthscale, where the LML slope is far from zero, and at a fixed
 * relative perturbation of it. Repeating the two estimates with fresh seeds
 * gives Var[dLML] / mean(dLML)^2 with a chi-square interval on the variance.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "qgp/estimators/estimators.hpp"
#include "qgp/kernels/covariance.hpp"
#include "qgp/trainer/training.hpp"

namespace qgp::trainer {

struct StudyConfig {
    std::vector<std::size_t> sizes{16, 64, 256};
    kernels::KernelSpec generating;  ///< data-generating kernel
    double grid_spacing = 0.25;      ///< input spacing, fixed across n
    double misspecification = 0.5;   ///< evaluation lengthscale / generating lengthscale
    double perturbation = 0.05;      ///< relative step of the perturbed parameter
    std::size_t repetitions = 64;
    double confidence = 0.95;
    double degenerate_threshold = 1e-9; ///< |mean dLML| at or below this is flagged
    Evaluator evaluator = Evaluator::Quantum;
    estimators::QuantumSettings quantum;

    void validate() const;
};

struct StudyRow {
    std::size_t n = 0;
    double delta_mean = 0.0;   ///< mean of the repeated dLML estimates
    double delta_exact = 0.0;  ///< exact dLML from the Cholesky oracle
    double delta_variance = 0.0;
    double rel_var = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    std::size_t repetitions = 0;
    bool flagged = false; ///< degenerate denominator; excluded from trend checks
};

/// Perturbed parameter: lengthscale for the squared-exponential kernel,
/// support radius for the compact kernel.
Parameter perturbed_parameter(kernels::KernelKind kind);

std::vector<StudyRow> relative_variance_study(const StudyConfig &cfg, std::uint64_t seed);

/// Header: n,delta_mean,delta_exact,rel_var,ci_low,ci_high,repetitions,flagged
void write_study_csv(std::ostream &out, const std::vector<StudyRow> &rows);

} // namespace qgp::trainer
