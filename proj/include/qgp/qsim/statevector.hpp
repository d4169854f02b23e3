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
 * Statevector backend: simulates the full phase-estimation circuit on the
 * composite system (n-dimensional first register x T-state time register).
 *
 * Circuit: Hadamard on every time qubit, controlled U^(2^q) from time qubit q
 * with U = exp(+i A t0 / T), then the register Fourier transform built from
 * Hadamards, controlled phases and the final qubit reversal. U^(2^q) is
 * formed exactly from the spectral decomposition of A.
 *
 * Amplitudes are stored with the system index fastest: amp[tau * n + j].
 */

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "qgp/numerics/symmetric_matrix.hpp"
#include "qgp/qsim/phase_estimation.hpp"

namespace qgp::qsim {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

struct StatevectorLimits {
    std::size_t max_amplitudes = std::size_t{1} << 20; ///< n * T budget
};

/// Joint readout law over (basis index j of the first register, bin k).
class JointDistribution {
  public:
    JointDistribution(std::size_t system_size, std::size_t register_size,
                      std::vector<double> probabilities);

    std::size_t system_size() const { return system_size_; }
    std::size_t register_size() const { return register_size_; }
    double operator()(std::size_t basis, std::size_t bin) const {
        return probabilities_[bin * system_size_ + basis];
    }

    OutcomeDistribution bin_marginal() const;
    std::vector<double> basis_marginal() const;

  private:
    std::size_t system_size_;
    std::size_t register_size_;
    std::vector<double> probabilities_;
};

/// In-place register transform b_k = T^(-1/2) sum_tau exp(-2 pi i k tau / T) a_tau
/// on a buffer laid out as amp[tau * stride + j], realised gate by gate.
void apply_register_fourier_transform(ComplexVector &amplitudes, std::size_t stride,
                                      std::size_t register_size);

/// Final composite state after the transform. Throws ConfigError when n * T
/// exceeds the limits and DataError when the input is not normalised.
ComplexVector phase_estimation_state(const numerics::SymmetricMatrix &a,
                                     std::span<const Complex> input,
                                     const PhaseEstimationConfig &cfg,
                                     const StatevectorLimits &limits = {});

JointDistribution statevector_phase_estimation(const numerics::SymmetricMatrix &a,
                                               std::span<const Complex> input,
                                               const PhaseEstimationConfig &cfg,
                                               const StatevectorLimits &limits = {});

double squared_norm(std::span<const Complex> state);

} // namespace qgp::qsim
