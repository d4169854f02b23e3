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
#include <string>
#include <string_view>

#include "qgp/kernels/dataset.hpp"
#include "qgp/numerics/symmetric_matrix.hpp"
#include "qgp/random.hpp"

namespace qgp::kernels {

using numerics::SymmetricMatrix;

enum class KernelKind { SquaredExponential, CompactSupport };

/// "rbf" / "compact", the names used on the command line.
std::string_view kernel_name(KernelKind kind);
KernelKind parse_kernel_kind(std::string_view name);

struct Hyperparameters {
    double lengthscale = 1.0;     // input units
    double signal_variance = 1.0; // output units^2
    double noise_variance = 0.1;  // output units^2
    double support_radius = 1.0;  // input units, compact kernel only

    void validate() const;

    friend bool operator==(const Hyperparameters &, const Hyperparameters &) = default;
};

struct KernelSpec {
    KernelKind kind = KernelKind::SquaredExponential;
    Hyperparameters params;
};

/// k(r) for two inputs at Euclidean distance r.
///   SquaredExponential: s^2 exp(-r^2 / (2 l^2))
///   CompactSupport:     s^2 max(0, 1 - r/rho)^4 (4 r/rho + 1)   (Wendland, C^2)
double kernel_value(const KernelSpec &spec, double distance);

/// K_ij = k(|x_i - x_j|), prior mean zero.
SymmetricMatrix build_covariance(const Dataset &data, const KernelSpec &spec);

/// A = K + noise_variance * I.
SymmetricMatrix regularized_matrix(const SymmetricMatrix &k, double noise_variance);

/// Convenience: regularized_matrix(build_covariance(data, spec), spec noise).
SymmetricMatrix regularized_covariance(const Dataset &data, const KernelSpec &spec);

/// Largest number of entries with |a_ij| > zero_tolerance in any row.
std::size_t sparsity(const SymmetricMatrix &a, double zero_tolerance = 0.0);

/// One draw y ~ N(0, cov) using the Cholesky factor of cov.
Vector sample_gaussian(const SymmetricMatrix &cov, Rng &rng);

/// Input layouts for synthetic data.
Matrix uniform_inputs(std::size_t n, std::size_t d, double extent, Rng &rng);
Matrix grid_inputs(std::size_t n, double spacing);

/// Synthetic GP dataset: y ~ N(0, K + noise I) at the given inputs.
Dataset sample_gp_dataset(Matrix inputs, const KernelSpec &spec, Rng &rng);

} // namespace qgp::kernels
