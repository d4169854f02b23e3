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

#include "qgp/baselines/exact.hpp"

#include <cmath>
#include <numbers>

#include "qgp/errors.hpp"

namespace qgp::baselines {

namespace {

double normalisation(Eigen::Index n) {
    return 0.5 * static_cast<double>(n) * std::log(2.0 * std::numbers::pi);
}

} // namespace

double exact_datafit(const numerics::SymmetricMatrix &a, const numerics::Vector &y) {
    return y.dot(numerics::solve_spd(a, y));
}

double exact_lml(const numerics::SymmetricMatrix &a, const numerics::Vector &y) {
    const double datafit = exact_datafit(a, y);
    return -0.5 * numerics::cholesky_logdet(a) - 0.5 * datafit - normalisation(y.size());
}

double exact_lml(const kernels::Dataset &data, const kernels::KernelSpec &spec) {
    return exact_lml(kernels::regularized_covariance(data, spec), data.outputs());
}

double spectral_lml(const numerics::SpectralDecomposition &sd,
                    const numerics::ProjectedVector &py) {
    if (py.coefficients.size() != sd.eigenvalues.size()) {
        throw DimensionError("projection does not match the decomposition");
    }
    if (sd.min_eigenvalue() <= 0.0) {
        throw DefinitenessError("spectrum is not positive");
    }
    const double logdet = sd.eigenvalues.array().log().sum();
    const double datafit = (py.coefficients.array().square() / sd.eigenvalues.array()).sum();
    return -0.5 * logdet - 0.5 * datafit - normalisation(sd.eigenvalues.size());
}

} // namespace qgp::baselines
