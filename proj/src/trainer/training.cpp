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

#include "qgp/trainer/training.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>

#include "qgp/baselines/exact.hpp"
#include "qgp/errors.hpp"
#include "qgp/random.hpp"

namespace qgp::trainer {

std::pair<double, double> delta_lml(const EstimateReport &prev, const EstimateReport &next) {
    return {next.mean - prev.mean, std::hypot(next.standard_error, prev.standard_error)};
}

namespace {

constexpr std::pair<Parameter, std::string_view> kParameterNames[] = {
    {Parameter::Lengthscale, "lengthscale"},
    {Parameter::SignalVariance, "signal_variance"},
    {Parameter::NoiseVariance, "noise_variance"},
    {Parameter::SupportRadius, "support_radius"},
};

using GridIndex = std::vector<std::size_t>;

struct Evaluation {
    EstimateReport report;
    bool failed = false;
    std::string error;
};

std::vector<GridAxis> normalised_grid(const std::vector<GridAxis> &grid) {
    std::vector<GridAxis> out = grid;
    for (auto &axis : out) {
        std::sort(axis.values.begin(), axis.values.end());
        axis.values.erase(std::unique(axis.values.begin(), axis.values.end()), axis.values.end());
    }
    return out;
}

} // namespace

std::string_view parameter_name(Parameter p) {
    for (const auto &[value, name] : kParameterNames) {
        if (value == p) {
            return name;
        }
    }
    return "unknown";
}

Parameter parse_parameter(std::string_view name) {
    for (const auto &[value, n] : kParameterNames) {
        if (n == name) {
            return value;
        }
    }
    throw ConfigError("unknown hyperparameter '" + std::string(name) + "'");
}

double get_parameter(const Hyperparameters &h, Parameter p) {
    switch (p) {
    case Parameter::Lengthscale:
        return h.lengthscale;
    case Parameter::SignalVariance:
        return h.signal_variance;
    case Parameter::NoiseVariance:
        return h.noise_variance;
    case Parameter::SupportRadius:
        return h.support_radius;
    }
    return 0.0;
}

void set_parameter(Hyperparameters &h, Parameter p, double value) {
    switch (p) {
    case Parameter::Lengthscale:
        h.lengthscale = value;
        break;
    case Parameter::SignalVariance:
        h.signal_variance = value;
        break;
    case Parameter::NoiseVariance:
        h.noise_variance = value;
        break;
    case Parameter::SupportRadius:
        h.support_radius = value;
        break;
    }
}

std::string_view evaluator_name(Evaluator e) {
    return e == Evaluator::Quantum ? "quantum" : "exact";
}

Evaluator parse_evaluator(std::string_view name) {
    if (name == "quantum") {
        return Evaluator::Quantum;
    }
    if (name == "exact") {
        return Evaluator::ExactOracle;
    }
    throw ConfigError("unknown evaluator '" + std::string(name) + "'");
}

void TrainerConfig::validate() const {
    if (grid.empty()) {
        throw ConfigError("training grid is empty");
    }
    if (max_steps < 1) {
        throw ConfigError("max_steps must be >= 1");
    }
    if (!(acceptance_threshold >= 0.0)) {
        throw ConfigError("acceptance threshold must be >= 0");
    }
    for (std::size_t a = 0; a < grid.size(); ++a) {
        if (grid[a].values.empty()) {
            throw ConfigError("grid axis '" + std::string(parameter_name(grid[a].parameter)) +
                              "' has no values");
        }
        for (std::size_t b = 0; b < a; ++b) {
            if (grid[b].parameter == grid[a].parameter) {
                throw ConfigError("grid axis '" + std::string(parameter_name(grid[a].parameter)) +
                                  "' appears twice");
            }
        }
        for (double v : grid[a].values) {
            if (!(v > 0.0) || !std::isfinite(v)) {
                throw ConfigError("grid values must be finite and positive");
            }
        }
    }
    base.params.validate();
}

TrainingTrace train(const kernels::Dataset &data, const TrainerConfig &cfg, std::uint64_t seed) {
    cfg.validate();
    const auto grid = normalised_grid(cfg.grid);

    auto theta_at = [&](const GridIndex &index) {
        Hyperparameters h = cfg.base.params;
        for (std::size_t a = 0; a < grid.size(); ++a) {
            set_parameter(h, grid[a].parameter, grid[a].values[index[a]]);
        }
        return h;
    };

    std::map<GridIndex, Evaluation> memo;
    TrainingTrace trace;
    auto evaluate = [&](const GridIndex &index) -> const Evaluation & {
        if (auto it = memo.find(index); it != memo.end()) {
            return it->second;
        }
        std::uint64_t point_seed = seed;
        for (std::size_t i : index) {
            point_seed = mix_seed(point_seed, i);
        }
        Evaluation ev;
        try {
            const kernels::KernelSpec spec{cfg.base.kind, theta_at(index)};
            const auto a = kernels::regularized_covariance(data, spec);
            if (cfg.evaluator == Evaluator::ExactOracle) {
                ev.report.mean = baselines::exact_lml(a, data.outputs());
                ev.report.seed = point_seed;
            } else {
                const estimators::QuantumInstance instance(a, data.outputs(),
                                                           spec.params.noise_variance, cfg.quantum);
                ev.report = instance.lml(point_seed);
                trace.budget_used += cfg.quantum.samples_det + cfg.quantum.samples_fit;
            }
        } catch (const NumericError &e) {
            ev.failed = true;
            ev.error = e.what();
        } catch (const DataError &e) {
            ev.failed = true;
            ev.error = e.what();
        }
        ++trace.evaluations;
        return memo.emplace(index, std::move(ev)).first->second;
    };

    GridIndex current(grid.size());
    for (std::size_t a = 0; a < grid.size(); ++a) {
        current[a] = (grid[a].values.size() - 1) / 2;
    }
    const Evaluation &start = evaluate(current);
    if (start.failed) {
        throw NumericError("training start point failed: " + start.error);
    }
    TrainingStep first;
    first.kind = TrainingStep::Kind::Start;
    first.theta = theta_at(current);
    first.lml = start.report;
    trace.steps.push_back(first);
    EstimateReport current_report = start.report;

    for (int pass = 0; pass < cfg.max_steps; ++pass) {
        trace.passes = pass + 1;
        bool moved = false;
        for (std::size_t a = 0; a < grid.size(); ++a) {
            std::size_t chosen_step = 0;
            std::size_t chosen_value = current[a];
            bool found = false;
            double best_mean = 0.0;
            for (std::size_t v = 0; v < grid[a].values.size(); ++v) {
                if (v == current[a]) {
                    continue;
                }
                GridIndex candidate = current;
                candidate[a] = v;
                const Evaluation &ev = evaluate(candidate);

                TrainingStep step;
                step.pass = pass;
                step.theta = theta_at(candidate);
                step.parameter = std::string(parameter_name(grid[a].parameter));
                step.failed = ev.failed;
                step.error = ev.error;
                if (!ev.failed) {
                    step.lml = ev.report;
                    std::tie(step.delta_lml, step.delta_stderr) = delta_lml(current_report, ev.report);
                    const bool qualifies =
                        step.delta_lml > cfg.acceptance_threshold * step.delta_stderr &&
                        step.delta_lml > 0.0;
                    if (qualifies && (!found || ev.report.mean > best_mean)) {
                        found = true;
                        best_mean = ev.report.mean;
                        chosen_value = v;
                        chosen_step = trace.steps.size();
                    }
                }
                trace.steps.push_back(std::move(step));
            }
            if (found) {
                trace.steps[chosen_step].accepted = true;
                current[a] = chosen_value;
                current_report = memo.at(current).report;
                moved = true;
            }
        }
        if (!moved) {
            break;
        }
    }

    bool have_best = false;
    for (const auto &step : trace.steps) {
        if (!step.failed && (!have_best || step.lml.mean > trace.best_lml.mean)) {
            have_best = true;
            trace.best_lml = step.lml;
            trace.best_theta = step.theta;
        }
    }
    return trace;
}

nlohmann::ordered_json to_json(const Hyperparameters &h) {
    nlohmann::ordered_json j;
    j["lengthscale"] = h.lengthscale;
    j["signal_variance"] = h.signal_variance;
    j["noise_variance"] = h.noise_variance;
    j["support_radius"] = h.support_radius;
    return j;
}

nlohmann::ordered_json to_json(const TrainingStep &step) {
    nlohmann::ordered_json j;
    j["kind"] = step.kind == TrainingStep::Kind::Start ? "start" : "candidate";
    j["pass"] = step.pass;
    j["parameter"] = step.parameter;
    j["theta"] = to_json(step.theta);
    j["lml"] = estimators::to_json(step.lml);
    j["delta_lml"] = step.delta_lml;
    j["delta_stderr"] = step.delta_stderr;
    j["accepted"] = step.accepted;
    j["failed"] = step.failed;
    if (step.failed) {
        j["error"] = step.error;
    }
    return j;
}

nlohmann::ordered_json summary_json(const TrainingTrace &trace) {
    nlohmann::ordered_json s;
    s["best_theta"] = to_json(trace.best_theta);
    s["best_lml"] = estimators::to_json(trace.best_lml);
    s["budget_used"] = trace.budget_used;
    s["evaluations"] = trace.evaluations;
    s["passes"] = trace.passes;
    s["steps"] = trace.steps.size();
    nlohmann::ordered_json j;
    j["summary"] = std::move(s);
    return j;
}

void write_trace_jsonl(std::ostream &out, const TrainingTrace &trace) {
    for (const auto &step : trace.steps) {
        out << to_json(step).dump() << '\n';
    }
    out << summary_json(trace).dump() << '\n';
}

} // namespace qgp::trainer
