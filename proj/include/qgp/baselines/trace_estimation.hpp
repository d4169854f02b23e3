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

/**
 * @file
 * Classical stochastic trace estimation of log det A = Tr log A.
 *
 * Each Rademacher probe z contributes z^T p(A) z, where p is either the
 * truncated Taylor series of log around the spectral bound or a Chebyshev
 * fit on an interval; p(A) z costs d matrix-vector products. The gap
 * between the probe average and Tr log A is the deterministic polynomial
 * error, which no amount of probing removes.
 */

#pragma once

#include <cstdint>
#include <string_view>

#include "qgp/baselines/chebyshev.hpp"
#include "qgp/estimators/estimators.hpp"
#include "qgp/estimators/report.hpp"
#include "qgp/numerics/symmetric_matrix.hpp"

namespace qgp::baselines {

enum class TraceMethod { TaylorTruncated, Chebyshev };
enum class ProbeKind { Rademacher };

std::string_view trace_method_name(TraceMethod method); ///< "taylor" / "chebyshev"
TraceMethod parse_trace_method(std::string_view name);

struct TraceEstimatorConfig {
    TraceMethod method = TraceMethod::TaylorTruncated;
    int degree = 5;
    std::uint64_t probe_count = 100;
    /// Chebyshev: required fit interval. Taylor: `upper` is the scaling
    /// lambda_up, with 0 meaning spectral_upper_bound(A); `lower` unused.
    double lower = 0.0;
    double upper = 0.0;
    ProbeKind probe_kind = ProbeKind::Rademacher;

    void validate() const;
};

/// log(lambda_up) z - sum_{j=1..d} (I - A/lambda_up)^j z / j.
/// Throws DomainError unless |I - A/lambda_up|_2 < 1.
numerics::Vector taylor_log_matvec(const numerics::SymmetricMatrix &a, const numerics::Vector &z,
                                   int degree, double lambda_up);

/// p(A) z for a Chebyshev series, by the matrix Clenshaw recurrence. The
/// caller is responsible for the spectrum lying in the series interval.
numerics::Vector chebyshev_log_matvec(const numerics::SymmetricMatrix &a,
                                      const numerics::Vector &z, const ChebyshevSeries &series);

/// Hutchinson estimate of Tr p(A). The convergence region is checked once
/// against the exact spectrum; violations raise DomainError.
estimators::EstimateReport hutchinson_trace_log(const numerics::SymmetricMatrix &a,
                                                const TraceEstimatorConfig &cfg,
                                                std::uint64_t seed,
                                                const estimators::EstimatorOptions &options = {});

/// Tr p(A) computed exactly from the spectrum: what the probe average
/// converges to.
double polynomial_trace_log(const numerics::SymmetricMatrix &a, const TraceEstimatorConfig &cfg);

} // namespace qgp::baselines
