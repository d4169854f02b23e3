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

#include "qgp/numerics/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include "qgp/errors.hpp"

namespace qgp::numerics {

namespace {

Eigen::LLT<Matrix> factor(const SymmetricMatrix &a) {
    Eigen::LLT<Matrix> llt(a.dense());
    if (llt.info() != Eigen::Success) {
        throw DefinitenessError("matrix is not positive definite (Cholesky pivot <= 0)");
    }
    return llt;
}

} // namespace

SpectralDecomposition eigendecompose(const SymmetricMatrix &a) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(a.dense(), Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) {
        throw ConvergenceError("symmetric eigensolver failed to converge");
    }
    // Eigen already sorts ascending.
    return SpectralDecomposition{solver.eigenvalues(), solver.eigenvectors(), a.size()};
}

ProjectedVector project(const SpectralDecomposition &sd, const Vector &y) {
    if (static_cast<std::size_t>(y.size()) != sd.size()) {
        throw DimensionError("vector length " + std::to_string(y.size()) +
                             " does not match dimension " + std::to_string(sd.size()));
    }
    return ProjectedVector{y, sd.eigenvectors.transpose() * y, y.norm()};
}

double cholesky_logdet(const SymmetricMatrix &a) {
    const auto llt = factor(a);
    const Matrix &l = llt.matrixLLT();
    double sum = 0.0;
    for (Eigen::Index i = 0; i < l.rows(); ++i) {
        sum += std::log(l(i, i));
    }
    return 2.0 * sum;
}

Vector solve_spd(const SymmetricMatrix &a, const Vector &y) {
    if (static_cast<std::size_t>(y.size()) != a.size()) {
        throw DimensionError("right-hand side length " + std::to_string(y.size()) +
                             " does not match dimension " + std::to_string(a.size()));
    }
    return factor(a).solve(y);
}

double spectral_upper_bound(const SymmetricMatrix &a) {
    const Matrix &m = a.dense();
    double gershgorin = -std::numeric_limits<double>::infinity();
    double gershgorin_low = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        const double radius = m.row(i).cwiseAbs().sum() - std::abs(m(i, i));
        gershgorin = std::max(gershgorin, m(i, i) + radius);
        gershgorin_low = std::min(gershgorin_low, m(i, i) - radius);
    }
    double bound = std::min(gershgorin, a.frobenius_norm());
    if (gershgorin_low >= 0.0) {
        bound = std::min(bound, m.trace());
    }
    return bound;
}

} // namespace qgp::numerics
