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

// Shared fixtures and independent oracles for the test suites.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "qgp/numerics/decomposition.hpp"
#include "qgp/numerics/symmetric_matrix.hpp"
#include "qgp/qsim/phase_estimation.hpp"
#include "qgp/random.hpp"

namespace qgp::testing {

using numerics::Matrix;
using numerics::SymmetricMatrix;
using numerics::Vector;

inline Matrix gaussian_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    Rng rng(seed);
    std::normal_distribution<double> normal;
    Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            m(i, j) = normal(rng);
        }
    }
    return m;
}

inline Vector gaussian_vector(std::size_t n, std::uint64_t seed) {
    return gaussian_matrix(n, 1, seed).col(0);
}

/// B^T B / n + shift I: symmetric positive definite with lambda_min >= shift.
inline SymmetricMatrix random_spd(std::size_t n, std::uint64_t seed, double shift = 1e-3) {
    const Matrix b = gaussian_matrix(n, n, seed);
    Matrix a = b.transpose() * b / static_cast<double>(n);
    a.diagonal().array() += shift;
    return SymmetricMatrix(0.5 * (a + a.transpose()));
}

/// Random orthogonal Q from the QR factorisation of a Gaussian matrix.
inline Matrix random_orthogonal(std::size_t n, std::uint64_t seed) {
    const Matrix g = gaussian_matrix(n, n, seed);
    Eigen::HouseholderQR<Matrix> qr(g);
    return qr.householderQ() * Matrix::Identity(g.rows(), g.cols());
}

/// Q diag(eigenvalues) Q^T.
inline SymmetricMatrix with_spectrum(const Vector &eigenvalues, std::uint64_t seed) {
    const Matrix q = random_orthogonal(static_cast<std::size_t>(eigenvalues.size()), seed);
    const Matrix a = q * eigenvalues.asDiagonal() * q.transpose();
    return SymmetricMatrix(0.5 * (a + a.transpose()));
}

/// |(1/T) sum_tau exp(2 pi i tau (c - k) / T)|^2 summed term by term.
inline std::vector<double> fejer_by_amplitude_sum(double center, std::size_t t) {
    std::vector<double> p(t);
    const double tt = static_cast<double>(t);
    for (std::size_t k = 0; k < t; ++k) {
        std::complex<double> amp = 0.0;
        for (std::size_t tau = 0; tau < t; ++tau) {
            const double phase = 2.0 * std::numbers::pi * static_cast<double>(tau) *
                                 (center - static_cast<double>(k)) / tt;
            amp += std::polar(1.0, phase);
        }
        p[k] = std::norm(amp / tt);
    }
    return p;
}

/// The decode table k -> lambda_hat for HalfBinClamp.
inline double decoded(std::size_t k, const qsim::PhaseEstimationConfig &cfg) {
    const double bpu = cfg.evolution_time / (2.0 * std::numbers::pi);
    return k == 0 ? 0.5 / bpu : static_cast<double>(k) / bpu;
}

/// E[n log lambda_hat] over the uniform eigenvalue mixture (HalfBinClamp).
inline double expected_logdet(const Vector &eigenvalues, const qsim::PhaseEstimationConfig &cfg) {
    double sum = 0.0;
    for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
        const auto p = fejer_by_amplitude_sum(eigenvalues(i) * cfg.evolution_time /
                                                  (2.0 * std::numbers::pi),
                                              cfg.register_size);
        for (std::size_t k = 0; k < p.size(); ++k) {
            sum += p[k] * std::log(decoded(k, cfg));
        }
    }
    return sum;
}

/// Post-selection success probability sum_i w_i sum_k P(k | l_i) C^2 / lambda_hat_k.
inline double expected_success(const Vector &eigenvalues, const Vector &gamma,
                               const qsim::PhaseEstimationConfig &cfg, double c2) {
    const double norm2 = gamma.squaredNorm();
    double sum = 0.0;
    for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
        const auto p = fejer_by_amplitude_sum(eigenvalues(i) * cfg.evolution_time /
                                                  (2.0 * std::numbers::pi),
                                              cfg.register_size);
        double inner = 0.0;
        for (std::size_t k = 0; k < p.size(); ++k) {
            inner += p[k] * c2 / decoded(k, cfg);
        }
        sum += gamma(i) * gamma(i) / norm2 * inner;
    }
    return sum;
}

/// Pearson chi-square p-value; cells with expectation below 5 are pooled.
inline double chi_square_p_value(const std::vector<double> &probabilities,
                                 const std::vector<std::uint64_t> &counts) {
    double total = 0.0;
    for (auto c : counts) {
        total += static_cast<double>(c);
    }
    double stat = 0.0;
    int cells = 0;
    double pooled_e = 0.0;
    double pooled_o = 0.0;
    for (std::size_t k = 0; k < probabilities.size(); ++k) {
        const double e = probabilities[k] * total;
        if (e < 5.0) {
            pooled_e += e;
            pooled_o += static_cast<double>(counts[k]);
            continue;
        }
        const double d = static_cast<double>(counts[k]) - e;
        stat += d * d / e;
        ++cells;
    }
    if (pooled_e >= 5.0) {
        stat += (pooled_o - pooled_e) * (pooled_o - pooled_e) / pooled_e;
        ++cells;
    } else if (pooled_o > 3.0 * std::max(pooled_e, 1.0) + 10.0) {
        return 0.0;
    }
    if (cells < 2) {
        return 1.0;
    }
    const boost::math::chi_squared chi(cells - 1);
    return boost::math::cdf(boost::math::complement(chi, stat));
}

} // namespace qgp::testing
