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

#include "qgp/kernels/covariance.hpp"
#include "qgp/kernels/dataset.hpp"
#include "qgp/numerics/decomposition.hpp"

namespace qgp::baselines {

/// y^T A^{-1} y through a Cholesky solve.
double exact_datafit(const numerics::SymmetricMatrix &a, const numerics::Vector &y);

/// -log det(A)/2 - y^T A^{-1} y / 2 - (n/2) log(2 pi), via Cholesky.
double exact_lml(const numerics::SymmetricMatrix &a, const numerics::Vector &y);
double exact_lml(const kernels::Dataset &data, const kernels::KernelSpec &spec);

/// The same quantity from the spectrum: -sum log(l_i)/2 - sum g_i^2 / l_i / 2 - ...
double spectral_lml(const numerics::SpectralDecomposition &sd,
                    const numerics::ProjectedVector &py);

} // namespace qgp::baselines
