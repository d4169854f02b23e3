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

#include "qgp/qsim/statevector.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "qgp/errors.hpp"
#include "qgp/numerics/decomposition.hpp"

namespace qgp::qsim {

namespace {

using MatrixXc = Eigen::MatrixXcd;
using VectorXc = Eigen::VectorXcd;

std::size_t qubit_count(std::size_t register_size) {
    std::size_t m = 0;
    while ((std::size_t{1} << m) < register_size) {
        ++m;
    }
    return m;
}

void hadamard(ComplexVector &amp, std::size_t stride, std::size_t register_size,
              std::size_t qubit) {
    const std::size_t bit = std::size_t{1} << qubit;
    const double s = std::numbers::sqrt2 / 2.0;
    for (std::size_t tau = 0; tau < register_size; ++tau) {
        if (tau & bit) {
            continue;
        }
        Complex *lo = &amp[tau * stride];
        Complex *hi = &amp[(tau | bit) * stride];
        for (std::size_t j = 0; j < stride; ++j) {
            const Complex a = lo[j];
            const Complex b = hi[j];
            lo[j] = s * (a + b);
            hi[j] = s * (a - b);
        }
    }
}

void controlled_phase(ComplexVector &amp, std::size_t stride, std::size_t register_size,
                      std::size_t q1, std::size_t q2, double angle) {
    const std::size_t mask = (std::size_t{1} << q1) | (std::size_t{1} << q2);
    const Complex phase = std::polar(1.0, angle);
    for (std::size_t tau = 0; tau < register_size; ++tau) {
        if ((tau & mask) != mask) {
            continue;
        }
        Complex *block = &amp[tau * stride];
        for (std::size_t j = 0; j < stride; ++j) {
            block[j] *= phase;
        }
    }
}

void swap_qubits(ComplexVector &amp, std::size_t stride, std::size_t register_size,
                 std::size_t q1, std::size_t q2) {
    const std::size_t b1 = std::size_t{1} << q1;
    const std::size_t b2 = std::size_t{1} << q2;
    for (std::size_t tau = 0; tau < register_size; ++tau) {
        // Visit each (b1 set, b2 clear) state once and exchange with its mirror.
        if ((tau & b1) && !(tau & b2)) {
            const std::size_t other = (tau & ~b1) | b2;
            for (std::size_t j = 0; j < stride; ++j) {
                std::swap(amp[tau * stride + j], amp[other * stride + j]);
            }
        }
    }
}

} // namespace

JointDistribution::JointDistribution(std::size_t system_size, std::size_t register_size,
                                     std::vector<double> probabilities)
    : system_size_(system_size), register_size_(register_size),
      probabilities_(std::move(probabilities)) {
    if (probabilities_.size() != system_size_ * register_size_) {
        throw DimensionError("joint distribution size mismatch");
    }
}

OutcomeDistribution JointDistribution::bin_marginal() const {
    OutcomeDistribution out;
    out.probabilities.assign(register_size_, 0.0);
    for (std::size_t k = 0; k < register_size_; ++k) {
        for (std::size_t j = 0; j < system_size_; ++j) {
            out.probabilities[k] += (*this)(j, k);
        }
    }
    return out;
}

std::vector<double> JointDistribution::basis_marginal() const {
    std::vector<double> out(system_size_, 0.0);
    for (std::size_t k = 0; k < register_size_; ++k) {
        for (std::size_t j = 0; j < system_size_; ++j) {
            out[j] += (*this)(j, k);
        }
    }
    return out;
}

void apply_register_fourier_transform(ComplexVector &amplitudes, std::size_t stride,
                                      std::size_t register_size) {
    if (amplitudes.size() != stride * register_size) {
        throw DimensionError("amplitude buffer does not match stride * register size");
    }
    const std::size_t m = qubit_count(register_size);
    // Textbook QFT circuit with every phase conjugated; H is real, so this
    // realises the complex conjugate of the QFT matrix, i.e. kernel e^{-2 pi i k tau / T}.
    for (std::size_t q = m; q-- > 0;) {
        hadamard(amplitudes, stride, register_size, q);
        for (std::size_t r = q; r-- > 0;) {
            const double angle = -std::numbers::pi / static_cast<double>(std::size_t{1} << (q - r));
            controlled_phase(amplitudes, stride, register_size, q, r, angle);
        }
    }
    for (std::size_t q = 0; q < m / 2; ++q) {
        swap_qubits(amplitudes, stride, register_size, q, m - 1 - q);
    }
}

double squared_norm(std::span<const Complex> state) {
    double sum = 0.0;
    for (const auto &z : state) {
        sum += std::norm(z);
    }
    return sum;
}

ComplexVector phase_estimation_state(const numerics::SymmetricMatrix &a,
                                     std::span<const Complex> input,
                                     const PhaseEstimationConfig &cfg,
                                     const StatevectorLimits &limits) {
    cfg.validate();
    const std::size_t n = a.size();
    const std::size_t t = cfg.register_size;
    if (input.size() != n) {
        throw DimensionError("input state has length " + std::to_string(input.size()) +
                             ", expected " + std::to_string(n));
    }
    if (n > limits.max_amplitudes / t) {
        throw ConfigError("statevector needs n * T = " + std::to_string(n * t) +
                          " amplitudes, budget is " + std::to_string(limits.max_amplitudes));
    }
    if (std::abs(squared_norm(input) - 1.0) > 1e-10) {
        throw DataError("input state is not normalised");
    }

    ComplexVector amp(n * t, Complex(0.0, 0.0));
    std::copy(input.begin(), input.end(), amp.begin());

    const std::size_t m = qubit_count(t);
    for (std::size_t q = 0; q < m; ++q) {
        hadamard(amp, n, t, q);
    }

    const auto sd = numerics::eigendecompose(a);
    const MatrixXc v = sd.eigenvectors.cast<Complex>();
    for (std::size_t q = 0; q < m; ++q) {
        const double step = cfg.evolution_time * static_cast<double>(std::size_t{1} << q) /
                            static_cast<double>(t);
        VectorXc phases(static_cast<Eigen::Index>(n));
        for (Eigen::Index i = 0; i < phases.size(); ++i) {
            phases(i) = std::polar(1.0, sd.eigenvalues(i) * step);
        }
        const MatrixXc power = v * phases.asDiagonal() * v.adjoint();
        const std::size_t bit = std::size_t{1} << q;
        for (std::size_t tau = 0; tau < t; ++tau) {
            if (!(tau & bit)) {
                continue;
            }
            Eigen::Map<VectorXc> block(amp.data() + tau * n, static_cast<Eigen::Index>(n));
            block = (power * block).eval();
        }
    }

    apply_register_fourier_transform(amp, n, t);
    return amp;
}

JointDistribution statevector_phase_estimation(const numerics::SymmetricMatrix &a,
                                               std::span<const Complex> input,
                                               const PhaseEstimationConfig &cfg,
                                               const StatevectorLimits &limits) {
    const auto amp = phase_estimation_state(a, input, cfg, limits);
    std::vector<double> probs(amp.size());
    for (std::size_t i = 0; i < amp.size(); ++i) {
        probs[i] = std::norm(amp[i]);
    }
    return JointDistribution(a.size(), cfg.register_size, std::move(probs));
}

} // namespace qgp::qsim
