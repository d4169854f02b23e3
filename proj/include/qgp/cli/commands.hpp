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

#include <iosfwd>
#include <string>
#include <vector>

#include "qgp/estimators/estimators.hpp"
#include "qgp/kernels/covariance.hpp"
#include "qgp/kernels/dataset.hpp"

namespace qgp::cli {

/// Exit codes: 0 success, 1 usage or configuration, 2 data, 3 numeric.
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;
inline constexpr int kExitNumeric = 3;

/// Runs one command line (without the program name), writing results to
/// `out` or the --out file and diagnostics to `err`. Never throws.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// The rows emitted by `compare`.
struct ComparisonRow {
    std::string method;
    std::size_t n = 0;
    std::uint64_t budget = 0;
    double estimate = 0.0;
    double standard_error = 0.0;
    double error_vs_oracle = 0.0;
    double wall_time = -1.0; ///< seconds; negative when not measured
};

struct ComparisonConfig {
    kernels::KernelSpec spec;
    estimators::QuantumSettings quantum;
    int taylor_degree = 5;
    int chebyshev_degree = 30;
    bool timing = false;
};

/// Exact, quantum, Taylor and Chebyshev LML estimates for one dataset. The
/// classical rows use Hutchinson log-determinants with samples_det probes
/// and the exact data-fit term, so every row shares the same log-det budget.
std::vector<ComparisonRow> compare_methods(const kernels::Dataset &data,
                                           const ComparisonConfig &cfg, std::uint64_t seed);

/// Header: method,n,budget,estimate,stderr,error_vs_oracle,wall_time
void write_comparison_csv(std::ostream &out, const std::vector<ComparisonRow> &rows);

} // namespace qgp::cli
