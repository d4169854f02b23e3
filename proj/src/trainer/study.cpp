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

#include "qgp/trainer/study.hpp"

#include <cmath>
#include <ostream>

#include <boost/math/distributions/chi_squared.hpp>

#include "qgp/baselines/exact.hpp"
#include "qgp/errors.hpp"
#include "qgp/random.hpp"
#include "qgp/statistics.hpp"
#include "qgp/text.hpp"

namespace qgp::trainer {

namespace {

constexpr std::uint64_t kStudyData = 0x7374756479ULL;
constexpr std::uint64_t kStudyBase = 1;
constexpr std::uint64_t kStudyStep = 2;

} // namespace

void StudyConfig::validate() const {
    if (sizes.empty()) {
        throw ConfigError("study needs at least one size");
    }
    for (std::size_t n : sizes) {
        if (n < 2 || (n & (n - 1)) != 0) {
            throw ConfigError("study sizes must be powers of two >= 2");
        }
    }
    if (repetitions < 2) {
        throw ConfigError("study needs at least two repetitions");
    }
    if (!(grid_spacing > 0.0) || !(misspecification > 0.0) || !(perturbation > 0.0)) {
        throw ConfigError("study spacing, misspecification and perturbation must be positive");
    }
    if (!(confidence > 0.0 && confidence < 1.0)) {
        throw ConfigError("confidence must lie in (0, 1)");
    }
    generating.params.validate();
}

Parameter perturbed_parameter(kernels::KernelKind kind) {
    return kind == kernels::KernelKind::CompactSupport ? Parameter::SupportRadius
                                                       : Parameter::Lengthscale;
}

std::vector<StudyRow> relative_variance_study(const StudyConfig &cfg, std::uint64_t seed) {
    cfg.validate();
    const Parameter param = perturbed_parameter(cfg.generating.kind);
    std::vector<StudyRow> rows;

    for (std::size_t n : cfg.sizes) {
        Rng data_rng = Rng::for_trial(seed, kStudyData, n);
        const auto data = kernels::sample_gp_dataset(kernels::grid_inputs(n, cfg.grid_spacing),
                                                     cfg.generating, data_rng);

        kernels::KernelSpec base = cfg.generating;
        set_parameter(base.params, param, get_parameter(base.params, param) * cfg.misspecification);
        kernels::KernelSpec step = base;
        set_parameter(step.params, param,
                      get_parameter(base.params, param) * (1.0 + cfg.perturbation));

        const auto a0 = kernels::regularized_covariance(data, base);
        const auto a1 = kernels::regularized_covariance(data, step);

        StudyRow row;
        row.n = n;
        row.repetitions = cfg.repetitions;
        row.delta_exact = baselines::exact_lml(a1, data.outputs()) -
                          baselines::exact_lml(a0, data.outputs());

        RunningStats deltas;
        if (cfg.evaluator == Evaluator::ExactOracle) {
            for (std::size_t r = 0; r < cfg.repetitions; ++r) {
                deltas.add(row.delta_exact);
            }
        } else {
            const estimators::QuantumInstance q0(a0, data.outputs(), base.params.noise_variance,
                                                 cfg.quantum);
            const estimators::QuantumInstance q1(a1, data.outputs(), step.params.noise_variance,
                                                 cfg.quantum);
            for (std::size_t r = 0; r < cfg.repetitions; ++r) {
                const std::uint64_t rep = mix_seed(seed, mix_seed(n, r));
                const auto e0 = q0.lml(mix_seed(rep, kStudyBase));
                const auto e1 = q1.lml(mix_seed(rep, kStudyStep));
                deltas.add(delta_lml(e0, e1).first);
            }
        }

        row.delta_mean = deltas.mean;
        row.delta_variance = deltas.variance();
        const double denom = row.delta_mean * row.delta_mean;
        row.flagged = !(std::abs(row.delta_mean) > cfg.degenerate_threshold);
        if (!row.flagged) {
            const double dof = static_cast<double>(cfg.repetitions - 1);
            const boost::math::chi_squared chi(dof);
            const double alpha = 1.0 - cfg.confidence;
            row.rel_var = row.delta_variance / denom;
            row.ci_low = dof * row.rel_var / boost::math::quantile(chi, 1.0 - alpha / 2.0);
            row.ci_high = dof * row.rel_var / boost::math::quantile(chi, alpha / 2.0);
        }
        rows.push_back(row);
    }
    return rows;
}

void write_study_csv(std::ostream &out, const std::vector<StudyRow> &rows) {
    out << "n,delta_mean,delta_exact,rel_var,ci_low,ci_high,repetitions,flagged\n";
    for (const auto &r : rows) {
        out << r.n << ',' << format_real(r.delta_mean) << ',' << format_real(r.delta_exact) << ','
            << format_real(r.rel_var) << ',' << format_real(r.ci_low) << ','
            << format_real(r.ci_high) << ',' << r.repetitions << ',' << (r.flagged ? 1 : 0)
            << '\n';
    }
}

} // namespace qgp::trainer
