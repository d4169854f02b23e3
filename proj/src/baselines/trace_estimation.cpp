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

#include "qgp/baselines/trace_estimation.hpp"

#include <cmath>
#include <functional>
#include <string>

#include "qgp/errors.hpp"
#include "qgp/numerics/decomposition.hpp"
#include "qgp/parallel.hpp"
#include "qgp/random.hpp"
#include "qgp/statistics.hpp"
#include "qgp/text.hpp"

namespace qgp::baselines {

namespace {

constexpr double kIntervalSlack = 1e-12;

double taylor_radius(const numerics::SpectralDecomposition &sd, double lambda_up) {
    return std::max(std::abs(1.0 - sd.min_eigenvalue() / lambda_up),
                    std::abs(1.0 - sd.max_eigenvalue() / lambda_up));
}

void require_taylor_convergence(const numerics::SpectralDecomposition &sd, double lambda_up) {
    const double rho = taylor_radius(sd, lambda_up);
    if (!(rho < 1.0)) {
        throw DomainError("Taylor series of log diverges: |I - A/lambda_up| = " + format_real(rho));
    }
}

void require_interval(const numerics::SpectralDecomposition &sd, const ChebyshevSeries &s) {
    if (sd.min_eigenvalue() < s.lower * (1.0 - kIntervalSlack) ||
        sd.max_eigenvalue() > s.upper * (1.0 + kIntervalSlack)) {
        throw DomainError("spectrum [" + format_real(sd.min_eigenvalue()) + ", " +
                          format_real(sd.max_eigenvalue()) + "] leaves the Chebyshev interval [" +
                          format_real(s.lower) + ", " + format_real(s.upper) + "]");
    }
}

double taylor_log_scalar(double x, int degree, double lambda_up) {
    const double r = 1.0 - x / lambda_up;
    double term = 1.0;
    double sum = std::log(lambda_up);
    for (int j = 1; j <= degree; ++j) {
        term *= r;
        sum -= term / j;
    }
    return sum;
}

numerics::Vector taylor_apply(const numerics::SymmetricMatrix &a, const numerics::Vector &z,
                              int degree, double lambda_up) {
    numerics::Vector w = z;
    numerics::Vector out = std::log(lambda_up) * z;
    for (int j = 1; j <= degree; ++j) {
        w -= a.dense() * w / lambda_up;
        out -= w / static_cast<double>(j);
    }
    return out;
}

/// Validated operator z -> p(A) z plus its scalar counterpart p(x).
struct LogPolynomial {
    std::function<numerics::Vector(const numerics::Vector &)> apply;
    std::function<double(double)> scalar;
};

LogPolynomial make_polynomial(const numerics::SymmetricMatrix &a, const TraceEstimatorConfig &cfg,
                              const numerics::SpectralDecomposition &sd) {
    if (cfg.method == TraceMethod::TaylorTruncated) {
        const double up = cfg.upper > 0.0 ? cfg.upper : numerics::spectral_upper_bound(a);
        require_taylor_convergence(sd, up);
        const int d = cfg.degree;
        return {[&a, d, up](const numerics::Vector &z) { return taylor_apply(a, z, d, up); },
                [d, up](double x) { return taylor_log_scalar(x, d, up); }};
    }
    auto series = chebyshev_log_coefficients(cfg.degree, cfg.lower, cfg.upper);
    require_interval(sd, series);
    return {[&a, series](const numerics::Vector &z) { return chebyshev_log_matvec(a, z, series); },
            [series](double x) { return series.evaluate(x); }};
}

} // namespace

std::string_view trace_method_name(TraceMethod method) {
    return method == TraceMethod::TaylorTruncated ? "taylor" : "chebyshev";
}

TraceMethod parse_trace_method(std::string_view name) {
    if (name == "taylor") {
        return TraceMethod::TaylorTruncated;
    }
    if (name == "chebyshev") {
        return TraceMethod::Chebyshev;
    }
    throw ConfigError("unknown trace method '" + std::string(name) + "'");
}

void TraceEstimatorConfig::validate() const {
    if (degree < 1) {
        throw ConfigError("trace estimator degree must be >= 1");
    }
    if (probe_count < 1) {
        throw ConfigError("trace estimator needs at least one probe");
    }
    if (method == TraceMethod::Chebyshev && (!(lower > 0.0) || !(upper > lower))) {
        throw ConfigError("Chebyshev interval needs 0 < lower < upper");
    }
    if (method == TraceMethod::TaylorTruncated && upper < 0.0) {
        throw ConfigError("Taylor scaling bound must be positive");
    }
}

numerics::Vector taylor_log_matvec(const numerics::SymmetricMatrix &a, const numerics::Vector &z,
                                   int degree, double lambda_up) {
    if (z.size() != static_cast<Eigen::Index>(a.size())) {
        throw DimensionError("probe length does not match the matrix");
    }
    if (!(lambda_up > 0.0)) {
        throw ConfigError("Taylor scaling bound must be positive");
    }
    require_taylor_convergence(numerics::eigendecompose(a), lambda_up);
    return taylor_apply(a, z, degree, lambda_up);
}

numerics::Vector chebyshev_log_matvec(const numerics::SymmetricMatrix &a,
                                      const numerics::Vector &z, const ChebyshevSeries &series) {
    if (z.size() != static_cast<Eigen::Index>(a.size())) {
        throw DimensionError("probe length does not match the matrix");
    }
    const double scale = 2.0 / (series.upper - series.lower);
    const double shift = (series.upper + series.lower) / (series.upper - series.lower);
    auto map = [&](const numerics::Vector &v) -> numerics::Vector {
        return scale * (a.dense() * v) - shift * v;
    };
    numerics::Vector b1 = numerics::Vector::Zero(z.size());
    numerics::Vector b2 = numerics::Vector::Zero(z.size());
    for (std::size_t k = series.coefficients.size(); k-- > 1;) {
        numerics::Vector b0 = series.coefficients[k] * z + 2.0 * map(b1) - b2;
        b2 = std::move(b1);
        b1 = std::move(b0);
    }
    return 0.5 * series.coefficients[0] * z + map(b1) - b2;
}

estimators::EstimateReport hutchinson_trace_log(const numerics::SymmetricMatrix &a,
                                                const TraceEstimatorConfig &cfg,
                                                std::uint64_t seed,
                                                const estimators::EstimatorOptions &options) {
    cfg.validate();
    const auto poly = make_polynomial(a, cfg, numerics::eigendecompose(a));
    const auto n = static_cast<Eigen::Index>(a.size());

    const auto stats = reduce_trials<RunningStats>(
        cfg.probe_count, options.threads,
        [&](std::uint64_t begin, std::uint64_t end) {
            RunningStats s;
            numerics::Vector z(n);
            for (std::uint64_t p = begin; p < end; ++p) {
                Rng rng = Rng::for_trial(seed, streams::kProbes, p);
                for (Eigen::Index i = 0; i < n; ++i) {
                    z(i) = (rng() >> 63) ? 1.0 : -1.0;
                }
                s.add(z.dot(poly.apply(z)));
            }
            return s;
        },
        RunningStats::merge);

    estimators::EstimateReport r;
    r.mean = stats.mean;
    r.standard_error = stats.standard_error();
    r.sample_count = cfg.probe_count;
    r.seed = seed;
    return r;
}

double polynomial_trace_log(const numerics::SymmetricMatrix &a, const TraceEstimatorConfig &cfg) {
    cfg.validate();
    const auto sd = numerics::eigendecompose(a);
    const auto poly = make_polynomial(a, cfg, sd);
    double sum = 0.0;
    for (Eigen::Index i = 0; i < sd.eigenvalues.size(); ++i) {
        sum += poly.scalar(sd.eigenvalues(i));
    }
    return sum;
}

} // namespace qgp::baselines
