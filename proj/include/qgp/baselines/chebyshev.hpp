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

#include <vector>

namespace qgp::baselines {

/// Degree-d Chebyshev expansion of log on [lower, upper]:
///   log(x) ~ c_0 / 2 + sum_{k=1..d} c_k T_k(u),  u = (2x - lower - upper) / (upper - lower).
struct ChebyshevSeries {
    std::vector<double> coefficients; ///< c_0..c_d, c_0 not halved
    double lower = 0.0;
    double upper = 0.0;
    double max_grid_error = 0.0; ///< max |p(x) - log x| over 10^4 equispaced points

    int degree() const { return static_cast<int>(coefficients.size()) - 1; }
    double evaluate(double x) const;
};

inline constexpr int kChebyshevGridPoints = 10000;

/// Coefficients from the discrete cosine transform of log at the d + 1
/// Chebyshev nodes. Throws ConfigError unless 0 < lower < upper and d >= 0.
ChebyshevSeries chebyshev_log_coefficients(int degree, double lower, double upper);

} // namespace qgp::baselines
