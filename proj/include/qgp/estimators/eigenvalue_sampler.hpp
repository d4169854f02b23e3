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

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qgp/numerics/decomposition.hpp"
#include "qgp/qsim/phase_estimation.hpp"
#include "qgp/random.hpp"

namespace qgp::estimators {

/// Consecutive Resample redraws tolerated before a trial gives up.
inline constexpr int kMaxRedraws = 1000;

/// Phase-estimation readout tables for every eigenvalue of one matrix.
///
/// Building the tables costs O(n T); afterwards a readout for eigen-index i
/// is one uniform and a binary search. This is the analytic backend the
/// estimators run on.
class EigenvalueSampler {
  public:
    EigenvalueSampler(const numerics::SpectralDecomposition &sd,
                      const qsim::PhaseEstimationConfig &cfg);

    std::size_t size() const { return samplers_.size(); }
    const qsim::PhaseEstimationConfig &config() const { return cfg_; }
    const numerics::Vector &eigenvalues() const { return eigenvalues_; }

    /// Readout and decode for eigen-index i. Returns false when the bin is
    /// zero under the Resample policy. `clamps` counts zero-bin readouts.
    bool readout(std::size_t index, Rng &rng, double &decoded, std::uint64_t &clamps) const;

    /// Maximally mixed first register: eigen-index uniform over 0..n-1,
    /// then a readout. Resample redraws the whole pair.
    double sample_uniform(Rng &rng, std::uint64_t &clamps) const;

    /// Eigen-index drawn from the cumulative weights `cdf` (last entry is
    /// the total), then a readout; Resample redraws the whole pair.
    double sample_weighted(const std::vector<double> &cdf, Rng &rng,
                           std::uint64_t &clamps) const;

  private:
    qsim::PhaseEstimationConfig cfg_;
    numerics::Vector eigenvalues_;
    std::vector<qsim::OutcomeSampler> samplers_;
};

} // namespace qgp::estimators
