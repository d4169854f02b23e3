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

#include "qgp/baselines/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qgp/errors.hpp"

namespace qgp::baselines {

double ChebyshevSeries::evaluate(double x) const {
    const double u = (2.0 * x - lower - upper) / (upper - lower);
    // Clenshaw recurrence.
    double b1 = 0.0;
    double b2 = 0.0;
    for (std::size_t k = coefficients.size(); k-- > 1;) {
        const double b0 = coefficients[k] + 2.0 * u * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    return 0.5 * coefficients[0] + u * b1 - b2;
}

ChebyshevSeries chebyshev_log_coefficients(int degree, double lower, double upper) {
    if (degree < 0) {
        throw ConfigError("Chebyshev degree must be >= 0");
    }
    if (!(lower > 0.0) || !(upper > lower) || !std::isfinite(upper)) {
        throw ConfigError("Chebyshev interval needs 0 < lower < upper");
    }
    const int m = degree + 1;
    std::vector<double> samples(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        const double u = std::cos(std::numbers::pi * (j + 0.5) / m);
        samples[static_cast<std::size_t>(j)] = std::log(0.5 * (upper - lower) * u + 0.5 * (upper + lower));
    }

    ChebyshevSeries series;
    series.lower = lower;
    series.upper = upper;
    series.coefficients.resize(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        double sum = 0.0;
        for (int j = 0; j < m; ++j) {
            sum += samples[static_cast<std::size_t>(j)] * std::cos(std::numbers::pi * k * (j + 0.5) / m);
        }
        series.coefficients[static_cast<std::size_t>(k)] = 2.0 * sum / m;
    }

    for (int i = 0; i < kChebyshevGridPoints; ++i) {
        const double x = lower + (upper - lower) * i / (kChebyshevGridPoints - 1);
        series.max_grid_error = std::max(series.max_grid_error, std::abs(series.evaluate(x) - std::log(x)));
    }
    return series;
}

} // namespace qgp::baselines
