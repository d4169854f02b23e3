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
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qgp/estimators/estimators.hpp"
#include "qgp/estimators/report.hpp"
#include "qgp/kernels/covariance.hpp"
#include "qgp/kernels/dataset.hpp"

namespace qgp::trainer {

using estimators::EstimateReport;
using kernels::Hyperparameters;

/// (next.mean - prev.mean, sqrt(next.se^2 + prev.se^2)).
std::pair<double, double> delta_lml(const EstimateReport &prev, const EstimateReport &next);

enum class Parameter { Lengthscale, SignalVariance, NoiseVariance, SupportRadius };

std::string_view parameter_name(Parameter p); ///< "lengthscale", "signal_variance", ...
Parameter parse_parameter(std::string_view name);
double get_parameter(const Hyperparameters &h, Parameter p);
void set_parameter(Hyperparameters &h, Parameter p, double value);

struct GridAxis {
    Parameter parameter = Parameter::Lengthscale;
    std::vector<double> values;
};

enum class Evaluator { Quantum, ExactOracle };

std::string_view evaluator_name(Evaluator e); ///< "quantum" / "exact"
Evaluator parse_evaluator(std::string_view name);

struct TrainerConfig {
    kernels::KernelSpec base;   ///< kernel kind and values of parameters off the grid
    std::vector<GridAxis> grid; ///< values are sorted and de-duplicated on use
    Evaluator evaluator = Evaluator::Quantum;
    estimators::QuantumSettings quantum;
    double acceptance_threshold = 1.0; ///< in combined standard errors
    int max_steps = 8;                 ///< coordinate passes

    void validate() const;
};

/// One LML evaluation and the decision taken on it.
struct TrainingStep {
    enum class Kind { Start, Candidate };

    Kind kind = Kind::Candidate;
    int pass = 0;
    Hyperparameters theta;
    std::string parameter; ///< axis being varied; empty for the start point
    EstimateReport lml;
    double delta_lml = 0.0;    ///< relative to the current point at decision time
    double delta_stderr = 0.0;
    bool accepted = false;
    bool failed = false;
    std::string error;
};

struct TrainingTrace {
    std::vector<TrainingStep> steps;
    Hyperparameters best_theta;
    EstimateReport best_lml;
    std::uint64_t budget_used = 0; ///< quantum samples over distinct evaluations
    std::size_t evaluations = 0;   ///< distinct grid points evaluated
    int passes = 0;
};

/// Noise-robust coordinate ascent over the grid, starting from the middle
/// value of every axis. Within an axis pass every other value is evaluated;
/// the point moves to the best candidate whose LML beats the current one by
/// more than acceptance_threshold combined standard errors (ties go to the
/// smaller value). Stops after max_steps passes or a pass with no move.
/// Evaluations are memoised per grid point and seeded from the grid index,
/// so the trace is a pure function of (data, config, seed).
TrainingTrace train(const kernels::Dataset &data, const TrainerConfig &cfg, std::uint64_t seed);

nlohmann::ordered_json to_json(const Hyperparameters &h);
nlohmann::ordered_json to_json(const TrainingStep &step);
nlohmann::ordered_json summary_json(const TrainingTrace &trace);

/// One JSON object per step, then {"summary": ...}; newline terminated.
void write_trace_jsonl(std::ostream &out, const TrainingTrace &trace);

} // namespace qgp::trainer
