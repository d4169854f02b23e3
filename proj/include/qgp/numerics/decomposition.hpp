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

#include "qgp/numerics/symmetric_matrix.hpp"

namespace qgp::numerics {

/// Eigenvalues in ascending order with the matching orthonormal eigenvectors
/// as columns. This is the simulator's ground truth for A.
struct SpectralDecomposition {
    Vector eigenvalues;
    Matrix eigenvectors;
    std::size_t source_dimension = 0;

    std::size_t size() const { return source_dimension; }
    double min_eigenvalue() const { return eigenvalues(0); }
    double max_eigenvalue() const { return eigenvalues(eigenvalues.size() - 1); }
};

/// y expressed in the eigenbasis: coefficients(i) = e_i^T y.
struct ProjectedVector {
    Vector original;
    Vector coefficients;
    double norm = 0.0;
};

SpectralDecomposition eigendecompose(const SymmetricMatrix &a);

ProjectedVector project(const SpectralDecomposition &sd, const Vector &y);

/// log det A from the Cholesky factor, 2 * sum(log L_ii). Throws
/// DefinitenessError when a pivot is not positive.
double cholesky_logdet(const SymmetricMatrix &a);

/// Solves A x = y for positive-definite A.
Vector solve_spd(const SymmetricMatrix &a, const Vector &y);

/// An upper bound on the largest eigenvalue: the smallest of the Gershgorin
/// row bound, the Frobenius norm, and (when the Gershgorin discs certify
/// positive semi-definiteness) the trace.
double spectral_upper_bound(const SymmetricMatrix &a);

} // namespace qgp::numerics
